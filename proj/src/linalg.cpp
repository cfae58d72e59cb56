#include "linalg.hpp"

#include <algorithm>
#include <sstream>

namespace obs::linal {

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

long fp_norm(long a, long p)
{
    long r = a % p;
    return r < 0 ? r + p : r;
}

long fp_inv(long a, long p)
{
    a = fp_norm(a, p);
    if (a == 0)
        throw Error("fp_inv: zero");
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        std::tie(t, new_t) = std::pair<long, long>(new_t, t - q * new_t);
        std::tie(r, new_r) = std::pair<long, long>(new_r, r - q * new_r);
    }
    return fp_norm(t, p);
}

FpMatrix::FpMatrix(long p, size_t rows, size_t cols) : p_(p), rows_(rows), cols_(cols)
{
    if (!is_prime(p))
        throw NonPrimeModulus(std::to_string(p));
}

void FpMatrix::set(size_t r, size_t c, long value)
{
    if (r >= rows_ || c >= cols_)
        throw Error("FpMatrix::set: index out of range");
    long v = fp_norm(value, p_);
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

long FpMatrix::at(size_t r, size_t c) const
{
    auto it = entries_.find({r, c});
    return it == entries_.end() ? 0 : it->second;
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t(p_, cols_, rows_);
    for (const auto& [rc, v] : entries_)
        t.set(rc.second, rc.first, v);
    return t;
}

FpVector FpMatrix::apply(const FpVector& v) const
{
    if (v.size() != cols_)
        throw Error("FpMatrix::apply: size mismatch");
    FpVector out(rows_, 0);
    for (const auto& [rc, a] : entries_)
        out[rc.first] = fp_norm(out[rc.first] + a * v[rc.second], p_);
    return out;
}

std::vector<FpVector> FpMatrix::dense_rows() const
{
    std::vector<FpVector> rows(rows_, FpVector(cols_, 0));
    for (const auto& [rc, v] : entries_)
        rows[rc.first][rc.second] = v;
    return rows;
}

std::vector<FpVector> fp_row_echelon(std::vector<FpVector> rows, long p)
{
    if (rows.empty())
        return rows;
    size_t cols = rows[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[pivot_row], rows[sel]);
        long inv = fp_inv(rows[pivot_row][col], p);
        for (size_t c = col; c < cols; ++c)
            rows[pivot_row][c] = fp_norm(rows[pivot_row][c] * inv, p);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0)
                continue;
            long f = rows[r][col];
            for (size_t c = col; c < cols; ++c)
                rows[r][c] = fp_norm(rows[r][c] - f * rows[pivot_row][c], p);
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

FpVector fp_reduce_against(const std::vector<FpVector>& echelon, FpVector v, long p)
{
    for (const auto& row : echelon) {
        size_t lead = 0;
        while (lead < row.size() && row[lead] == 0)
            ++lead;
        if (lead == row.size())
            continue;
        if (v[lead] != 0) {
            long f = v[lead];
            for (size_t c = lead; c < row.size(); ++c)
                v[c] = fp_norm(v[c] - f * row[c], p);
        }
    }
    return v;
}

size_t fp_rank_dense(std::vector<FpVector> rows, long p)
{
    return fp_row_echelon(std::move(rows), p).size();
}

std::vector<FpVector> fp_kernel_dense(const std::vector<FpVector>& rows, size_t cols, long p)
{
    // Echelonize, then back-substitute one kernel vector per free column.
    auto ech = fp_row_echelon(rows, p);
    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot(cols, false);
    for (const auto& row : ech) {
        size_t lead = 0;
        while (lead < cols && row[lead] == 0)
            ++lead;
        pivot_col_of_row.push_back(static_cast<long>(lead));
        if (lead < cols)
            is_pivot[lead] = true;
    }
    std::vector<FpVector> kernel;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col])
            continue;
        FpVector v(cols, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < ech.size(); ++r) {
            size_t pc = static_cast<size_t>(pivot_col_of_row[r]);
            if (pc >= cols)
                continue;
            // pivot entry is 1, so v[pc] = -sum of the rest
            long s = 0;
            for (size_t c = pc + 1; c < cols; ++c)
                if (v[c] != 0)
                    s = fp_norm(s + ech[r][c] * v[c], p);
            v[pc] = fp_norm(-s, p);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

bool fp_solve_dense(const std::vector<FpVector>& rows, size_t cols, const FpVector& b, FpVector& solution, long p)
{
    std::vector<FpVector> aug;
    aug.reserve(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        FpVector row = rows[r];
        row.push_back(fp_norm(b[r], p));
        aug.push_back(std::move(row));
    }
    auto ech = fp_row_echelon(std::move(aug), p);
    FpVector x(cols, 0);
    for (const auto& row : ech) {
        size_t lead = 0;
        while (lead <= cols && row[lead] == 0)
            ++lead;
        if (lead == cols)
            return false;  // 0 = nonzero
        long val = row[cols];
        for (size_t c = lead + 1; c < cols; ++c)
            if (x[c] != 0)
                val = fp_norm(val - row[c] * x[c], p);
        x[lead] = val;
    }
    // ech is fully reduced, but substitute in reverse for safety
    solution = std::move(x);
    return true;
}

RankKernel fp_rank_kernel(const FpMatrix& m)
{
    auto rows = m.dense_rows();
    auto kernel = fp_kernel_dense(rows, m.cols(), m.p());
    size_t rank = m.cols() - kernel.size();
    return RankKernel{rank, std::move(kernel)};
}

IntMatrix::IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

namespace {

    /* Smith normal form with tracked transforms: S = U * m * V with U, V
     * unimodular.  Uinv tracks the inverse of U so cokernel generators can be
     * expressed in the original basis. */
    struct SmithWork {
        IntMatrix S;
        IntMatrix U, Uinv, V;

        explicit SmithWork(const IntMatrix& m)
            : S(m), U(m.rows(), m.rows()), Uinv(m.rows(), m.rows()), V(m.cols(), m.cols())
        {
            for (size_t i = 0; i < m.rows(); ++i)
                U.at(i, i) = Uinv.at(i, i) = 1;
            for (size_t i = 0; i < m.cols(); ++i)
                V.at(i, i) = 1;
        }

        void row_add(size_t dst, size_t src, const Int& k)
        {
            for (size_t c = 0; c < S.cols(); ++c)
                S.at(dst, c) += k * S.at(src, c);
            for (size_t c = 0; c < U.cols(); ++c)
                U.at(dst, c) += k * U.at(src, c);
            for (size_t r = 0; r < Uinv.rows(); ++r)
                Uinv.at(r, src) -= k * Uinv.at(r, dst);
        }
        void row_swap(size_t a, size_t b)
        {
            if (a == b)
                return;
            for (size_t c = 0; c < S.cols(); ++c)
                std::swap(S.at(a, c), S.at(b, c));
            for (size_t c = 0; c < U.cols(); ++c)
                std::swap(U.at(a, c), U.at(b, c));
            for (size_t r = 0; r < Uinv.rows(); ++r)
                std::swap(Uinv.at(r, a), Uinv.at(r, b));
        }
        void row_negate(size_t a)
        {
            for (size_t c = 0; c < S.cols(); ++c)
                S.at(a, c) = -S.at(a, c);
            for (size_t c = 0; c < U.cols(); ++c)
                U.at(a, c) = -U.at(a, c);
            for (size_t r = 0; r < Uinv.rows(); ++r)
                Uinv.at(r, a) = -Uinv.at(r, a);
        }
        void col_add(size_t dst, size_t src, const Int& k)
        {
            for (size_t r = 0; r < S.rows(); ++r)
                S.at(r, dst) += k * S.at(r, src);
            for (size_t r = 0; r < V.rows(); ++r)
                V.at(r, dst) += k * V.at(r, src);
        }
        void col_swap(size_t a, size_t b)
        {
            if (a == b)
                return;
            for (size_t r = 0; r < S.rows(); ++r)
                std::swap(S.at(r, a), S.at(r, b));
            for (size_t r = 0; r < V.rows(); ++r)
                std::swap(V.at(r, a), V.at(r, b));
        }
        void col_negate(size_t a)
        {
            for (size_t r = 0; r < S.rows(); ++r)
                S.at(r, a) = -S.at(r, a);
            for (size_t r = 0; r < V.rows(); ++r)
                V.at(r, a) = -V.at(r, a);
        }

        void run()
        {
            size_t n = std::min(S.rows(), S.cols());
            size_t k = 0;
            while (k < n) {
                if (!select_pivot(k))
                    break;
                // clear row and column k, restarting when a remainder appears
                bool dirty = true;
                while (dirty) {
                    dirty = false;
                    for (size_t r = k + 1; r < S.rows(); ++r) {
                        if (S.at(r, k) == 0)
                            continue;
                        Int q = S.at(r, k) / S.at(k, k);
                        row_add(r, k, -q);
                        if (S.at(r, k) != 0) {
                            row_swap(k, r);
                            dirty = true;
                        }
                    }
                    for (size_t c = k + 1; c < S.cols(); ++c) {
                        if (S.at(k, c) == 0)
                            continue;
                        Int q = S.at(k, c) / S.at(k, k);
                        col_add(c, k, -q);
                        if (S.at(k, c) != 0) {
                            col_swap(k, c);
                            dirty = true;
                        }
                    }
                }
                if (S.at(k, k) < 0)
                    row_negate(k);
                // enforce divisibility: pivot must divide the remaining block
                bool redo = false;
                for (size_t r = k + 1; r < S.rows() && !redo; ++r) {
                    for (size_t c = k + 1; c < S.cols() && !redo; ++c) {
                        if (S.at(r, c) % S.at(k, k) != 0) {
                            row_add(k, r, 1);
                            redo = true;
                        }
                    }
                }
                if (!redo)
                    ++k;
            }
        }

        bool select_pivot(size_t k)
        {
            size_t br = S.rows(), bc = S.cols();
            Int best = 0;
            for (size_t r = k; r < S.rows(); ++r) {
                for (size_t c = k; c < S.cols(); ++c) {
                    if (S.at(r, c) == 0)
                        continue;
                    Int a = abs(S.at(r, c));
                    if (best == 0 || a < best) {
                        best = a;
                        br = r;
                        bc = c;
                    }
                }
            }
            if (best == 0)
                return false;
            row_swap(k, br);
            col_swap(k, bc);
            return true;
        }
    };

    std::string render_combination(const std::vector<Int>& coeffs, const std::vector<std::string>& names)
    {
        std::ostringstream out;
        bool first = true;
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0)
                continue;
            Int c = coeffs[i];
            if (first) {
                if (c == -1)
                    out << "-";
                else if (c != 1)
                    out << c.get_str() << "*";
            } else {
                out << (c > 0 ? " + " : " - ");
                Int a = abs(c);
                if (a != 1)
                    out << a.get_str() << "*";
            }
            out << names[i];
            first = false;
        }
        if (first)
            return "0";
        return out.str();
    }

}  // namespace

bool AbGroup::is_trivial() const
{
    for (const auto& o : orders)
        if (o != 1)
            return false;
    return true;
}

size_t AbGroup::free_rank() const
{
    size_t n = 0;
    for (const auto& o : orders)
        if (o == 0)
            ++n;
    return n;
}

size_t AbGroup::torsion_rank_at(long p) const
{
    size_t n = 0;
    for (const auto& o : orders)
        if (o != 0 && o % p == 0)
            ++n;
    return n;
}

std::string AbGroup::describe() const
{
    std::vector<Int> torsion;
    size_t free = 0;
    for (const auto& o : orders) {
        if (o == 0)
            ++free;
        else if (o != 1)
            torsion.push_back(o);
    }
    std::sort(torsion.begin(), torsion.end());
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < free; ++i) {
        out << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (const auto& t : torsion) {
        out << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    if (first)
        out << "0";
    return out.str();
}

bool AbGroup::same_isomorphism_type(const AbGroup& other) const
{
    return describe() == other.describe();
}

SmithResult smith_normal_form(const IntMatrix& m)
{
    SmithWork work(m);
    work.run();
    size_t n = std::min(m.rows(), m.cols());
    std::vector<Int> diag;
    for (size_t i = 0; i < n; ++i)
        diag.push_back(work.S.at(i, i));
    // strip trailing zeros of the diagonal but keep them meaningful for rank
    AbGroup ck;
    for (size_t i = 0; i < m.rows(); ++i) {
        Int d = i < n ? work.S.at(i, i) : Int(0);
        if (d == 1)
            continue;
        ck.orders.push_back(d);
        ck.generators.push_back("g" + std::to_string(ck.orders.size()));
    }
    return SmithResult{std::move(diag), std::move(ck)};
}

AbGroup p_localize(const AbGroup& g, long p)
{
    AbGroup out;
    for (size_t i = 0; i < g.orders.size(); ++i) {
        Int o = g.orders[i];
        if (o == 0) {
            out.orders.push_back(0);
            out.generators.push_back(i < g.generators.size() ? g.generators[i] : "");
            continue;
        }
        Int q = 1;
        while (o % p == 0) {
            q *= p;
            o /= p;
        }
        if (q != 1) {
            out.orders.push_back(q);
            out.generators.push_back(i < g.generators.size() ? g.generators[i] : "");
        }
    }
    return out;
}

AbGroup cokernel(const IntMatrix& m, const std::vector<std::string>& row_names)
{
    SmithWork work(m);
    work.run();
    size_t n = std::min(m.rows(), m.cols());
    AbGroup ck;
    for (size_t i = 0; i < m.rows(); ++i) {
        Int d = i < n ? work.S.at(i, i) : Int(0);
        if (d == 1)
            continue;
        std::vector<Int> coeffs(m.rows());
        for (size_t r = 0; r < m.rows(); ++r)
            coeffs[r] = work.Uinv.at(r, i);
        ck.orders.push_back(d);
        ck.generators.push_back(render_combination(coeffs, row_names));
    }
    return ck;
}

std::vector<std::vector<Int>> kernel_lattice(const IntMatrix& m)
{
    SmithWork work(m);
    work.run();
    size_t n = std::min(m.rows(), m.cols());
    size_t rank = 0;
    for (size_t i = 0; i < n; ++i)
        if (work.S.at(i, i) != 0)
            ++rank;
    std::vector<std::vector<Int>> basis;
    for (size_t c = rank; c < m.cols(); ++c) {
        std::vector<Int> v(m.cols());
        for (size_t r = 0; r < m.cols(); ++r)
            v[r] = work.V.at(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve_integer(const IntMatrix& m, const std::vector<Int>& b, std::vector<Int>& x)
{
    SmithWork work(m);
    work.run();
    size_t n = std::min(m.rows(), m.cols());
    std::vector<Int> ub(m.rows(), Int(0));
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.rows(); ++c)
            ub[r] += work.U.at(r, c) * b[c];
    std::vector<Int> y(m.cols(), Int(0));
    for (size_t i = 0; i < m.rows(); ++i) {
        Int d = i < n ? work.S.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0)
                return false;
        } else {
            if (ub[i] % d != 0)
                return false;
            if (i < m.cols())
                y[i] = ub[i] / d;
        }
    }
    x.assign(m.cols(), Int(0));
    for (size_t r = 0; r < m.cols(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            x[r] += work.V.at(r, c) * y[c];
    return true;
}

}  // namespace obs::linal
