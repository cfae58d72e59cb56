#pragma once
#include "errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace obs::linal {

using Int = mpz_class;

bool is_prime(long n);

// Residues are kept in [0, p).
long fp_norm(long a, long p);
long fp_inv(long a, long p);

using FpVector = std::vector<long>;

/* Sparse matrix over F_p, triplet storage.  Row-major deterministic pivoting
 * so kernel bases are reproducible. */
class FpMatrix {
public:
    FpMatrix(long p, size_t rows, size_t cols);

    long p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    void set(size_t r, size_t c, long value);
    long at(size_t r, size_t c) const;
    const std::map<std::pair<size_t, size_t>, long>& entries() const { return entries_; }

    FpMatrix transpose() const;
    FpVector apply(const FpVector& v) const;
    std::vector<FpVector> dense_rows() const;

private:
    long p_;
    size_t rows_, cols_;
    std::map<std::pair<size_t, size_t>, long> entries_;
};

struct RankKernel {
    size_t rank;
    std::vector<FpVector> kernel_basis;
};

RankKernel fp_rank_kernel(const FpMatrix& m);

// Dense Gaussian elimination helpers used throughout the toolkit.
size_t fp_rank_dense(std::vector<FpVector> rows, long p);
std::vector<FpVector> fp_kernel_dense(const std::vector<FpVector>& rows, size_t cols, long p);
// Solve M x = b (rows of M are equations); empty optional-like flag via bool.
bool fp_solve_dense(const std::vector<FpVector>& rows, size_t cols, const FpVector& b, FpVector& solution, long p);
// Reduce v against a row basis (rows already echelonized or not); returns residue.
std::vector<FpVector> fp_row_echelon(std::vector<FpVector> rows, long p);
FpVector fp_reduce_against(const std::vector<FpVector>& echelon, FpVector v, long p);

/* Dense matrix of arbitrary-precision integers. */
class IntMatrix {
public:
    IntMatrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Int& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Int& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;

private:
    size_t rows_, cols_;
    std::vector<Int> data_;
};

/* Finitely generated abelian group: named generators with cyclic orders.
 * Order 0 encodes an infinite cyclic factor.  normalize() sorts the orders
 * into a nondecreasing divisibility chain via Smith normal form. */
struct AbGroup {
    std::vector<std::string> generators;
    std::vector<Int> orders;

    static AbGroup zero() { return AbGroup{}; }
    size_t size() const { return orders.size(); }
    bool is_trivial() const;
    size_t free_rank() const;
    size_t torsion_rank_at(long p) const;  // number of cyclic factors with order divisible by p
    std::string describe() const;          // e.g. "Z + Z/3 + Z/3"
    bool same_isomorphism_type(const AbGroup& other) const;
};

struct SmithResult {
    std::vector<Int> diag;   // invariant factors, divisibility chain, zeros last
    AbGroup cokernel;        // presentation of coker(m) acting on Z^rows
};

SmithResult smith_normal_form(const IntMatrix& m);

AbGroup p_localize(const AbGroup& g, long p);

// Cokernel of the column lattice of m inside Z^rows, with generator names.
AbGroup cokernel(const IntMatrix& m, const std::vector<std::string>& row_names);

/* Integer lattice routines (exact, via fraction-free elimination).
 * kernel_lattice: basis of {x : m x = 0} as columns.
 * solve: one solution of m x = b over Z, false if none. */
std::vector<std::vector<Int>> kernel_lattice(const IntMatrix& m);
bool solve_integer(const IntMatrix& m, const std::vector<Int>& b, std::vector<Int>& x);

}  // namespace obs::linal
