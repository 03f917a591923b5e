#include "ambitoric/tensor.hpp"

#include <sstream>

namespace ambitoric {

Chart::Chart(std::vector<std::string> names_, std::vector<std::optional<int>> vars_,
             int orientation_)
    : names(std::move(names_)), vars(std::move(vars_)), orientation(orientation_) {
    if (names.size() != vars.size()) throw malformed_error("chart: names/vars size mismatch");
    if (names.size() != 2 && names.size() != 4)
        throw malformed_error("chart dimension must be 2 or 4");
    if (orientation != 1 && orientation != -1) throw malformed_error("chart orientation must be +-1");
}

Tensor::Tensor(Chart chart, int contravariant, int covariant, Sym sym)
    : chart_(std::move(chart)), contra_(contravariant), cov_(covariant), sym_(sym) {
    std::size_t n = 1;
    for (int i = 0; i < rank(); ++i) n *= static_cast<std::size_t>(dim());
    comp_.assign(n, RationalFunction());
}

std::size_t Tensor::index(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != rank()) throw internal_error("tensor index rank mismatch");
    std::size_t flat = 0;
    for (int i : idx) {
        if (i < 0 || i >= dim()) throw internal_error("tensor index out of range");
        flat = flat * static_cast<std::size_t>(dim()) + static_cast<std::size_t>(i);
    }
    return flat;
}

RationalFunction& Tensor::at(std::initializer_list<int> idx) { return comp_[index(idx)]; }
const RationalFunction& Tensor::at(std::initializer_list<int> idx) const { return comp_[index(idx)]; }

bool Tensor::is_zero() const {
    for (const auto& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

Tensor Tensor::operator-() const {
    Tensor r(*this);
    for (auto& c : r.comp_) c = -c;
    return r;
}

Tensor operator+(const Tensor& a, const Tensor& b) {
    if (a.chart_ != b.chart_ || a.contra_ != b.contra_ || a.cov_ != b.cov_)
        throw internal_error("tensor addition shape mismatch");
    Tensor r(a);
    for (std::size_t i = 0; i < r.comp_.size(); ++i) r.comp_[i] = r.comp_[i] + b.comp_[i];
    if (r.sym_ != b.sym_) r.sym_ = Sym::none;
    return r;
}

Tensor operator-(const Tensor& a, const Tensor& b) { return a + (-b); }

Tensor Tensor::scaled(const RationalFunction& f) const {
    Tensor r(*this);
    for (auto& c : r.comp_) c = c * f;
    return r;
}

bool Tensor::symmetry_ok() const {
    if (sym_ == Sym::none || rank() != 2) return true;
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j <= i; ++j) {
            const auto& a = at({i, j});
            const auto& b = at({j, i});
            if (sym_ == Sym::symmetric && a != b) return false;
            if (sym_ == Sym::antisymmetric && !(a + b).is_zero()) return false;
        }
    return true;
}

RationalFunction Tensor::coord_derivative(const RationalFunction& f, int i) const {
    const auto& v = chart_.vars[static_cast<std::size_t>(i)];
    if (!v) return RationalFunction();
    return f.derivative(*v);
}

std::string Tensor::str() const {
    std::ostringstream os;
    int n = dim();
    std::vector<int> idx(static_cast<std::size_t>(rank()), 0);
    for (std::size_t f = 0; f < comp_.size(); ++f) {
        if (comp_[f].is_zero()) continue;
        std::size_t rem = f;
        for (int k = rank() - 1; k >= 0; --k) {
            idx[static_cast<std::size_t>(k)] = static_cast<int>(rem % static_cast<std::size_t>(n));
            rem /= static_cast<std::size_t>(n);
        }
        os << "[";
        for (int k = 0; k < rank(); ++k) {
            if (k) os << ",";
            os << chart_.names[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
        }
        os << "] = " << comp_[f].str() << "\n";
    }
    std::string s = os.str();
    return s.empty() ? "0\n" : s;
}

RationalFunction metric_det(const Tensor& g) {
    int n = g.dim();
    if (n == 2) return g.at({0, 0}) * g.at({1, 1}) - g.at({0, 1}) * g.at({1, 0});
    // 4x4 Laplace expansion along the first row
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return g.at({r0, c0}) * (g.at({r1, c1}) * g.at({r2, c2}) - g.at({r1, c2}) * g.at({r2, c1})) -
               g.at({r0, c1}) * (g.at({r1, c0}) * g.at({r2, c2}) - g.at({r1, c2}) * g.at({r2, c0})) +
               g.at({r0, c2}) * (g.at({r1, c0}) * g.at({r2, c1}) - g.at({r1, c1}) * g.at({r2, c0}));
    };
    RationalFunction d;
    int sign = 1;
    for (int c = 0; c < 4; ++c) {
        int cols[3], k = 0;
        for (int cc = 0; cc < 4; ++cc)
            if (cc != c) cols[k++] = cc;
        RationalFunction minor = det3(1, 2, 3, cols[0], cols[1], cols[2]);
        RationalFunction term = g.at({0, c}) * minor;
        d = (sign > 0) ? d + term : d - term;
        sign = -sign;
    }
    return d;
}

Tensor metric_inverse(const Tensor& g) {
    int n = g.dim();
    RationalFunction det = metric_det(g);
    if (det.is_zero()) throw degenerate_error("metric is identically singular");
    Tensor inv(g.chart(), 2, 0, Sym::symmetric);
    if (n == 2) {
        inv.at({0, 0}) = g.at({1, 1}) / det;
        inv.at({1, 1}) = g.at({0, 0}) / det;
        inv.at({0, 1}) = -g.at({0, 1}) / det;
        inv.at({1, 0}) = inv.at({0, 1});
        return inv;
    }
    // adjugate via 3x3 cofactors
    auto minor3 = [&](int row, int col) {
        int rs[3], cs[3], a = 0, b = 0;
        for (int i = 0; i < 4; ++i) {
            if (i != row) rs[a++] = i;
            if (i != col) cs[b++] = i;
        }
        return g.at({rs[0], cs[0]}) *
                   (g.at({rs[1], cs[1]}) * g.at({rs[2], cs[2]}) -
                    g.at({rs[1], cs[2]}) * g.at({rs[2], cs[1]})) -
               g.at({rs[0], cs[1]}) *
                   (g.at({rs[1], cs[0]}) * g.at({rs[2], cs[2]}) -
                    g.at({rs[1], cs[2]}) * g.at({rs[2], cs[0]})) +
               g.at({rs[0], cs[2]}) *
                   (g.at({rs[1], cs[0]}) * g.at({rs[2], cs[1]}) -
                    g.at({rs[1], cs[1]}) * g.at({rs[2], cs[0]}));
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j <= i; ++j) {
            RationalFunction cof = minor3(j, i);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at({i, j}) = cof / det;
            inv.at({j, i}) = inv.at({i, j});
        }
    return inv;
}

Tensor exterior_derivative(const Tensor& form) {
    int n = form.dim();
    if (form.contravariant() != 0) throw malformed_error("exterior derivative of non-covariant tensor");
    if (form.covariant() == 1) {
        Tensor d(form.chart(), 0, 2, Sym::antisymmetric);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                d.at({i, j}) = form.coord_derivative(form.at({j}), i) -
                               form.coord_derivative(form.at({i}), j);
                d.at({j, i}) = -d.at({i, j});
            }
        return d;
    }
    if (form.covariant() == 2) {
        Tensor d(form.chart(), 0, 3);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    RationalFunction c = form.coord_derivative(form.at({j, k}), i) -
                                         form.coord_derivative(form.at({i, k}), j) +
                                         form.coord_derivative(form.at({i, j}), k);
                    // fill the full antisymmetrization
                    int idx[3] = {i, j, k};
                    int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
                    for (int pi = 0; pi < 6; ++pi) {
                        RationalFunction v = (pi < 3) ? c : -c;
                        d.at({idx[perms[pi][0]], idx[perms[pi][1]], idx[perms[pi][2]]}) = v;
                    }
                }
        return d;
    }
    throw malformed_error("exterior derivative supports 1- and 2-forms only");
}

Tensor wedge11(const Tensor& a, const Tensor& b) {
    int n = a.dim();
    Tensor w(a.chart(), 0, 2, Sym::antisymmetric);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w.at({i, j}) = a.at({i}) * b.at({j}) - a.at({j}) * b.at({i});
    return w;
}

Tensor wedge12(const Tensor& a, const Tensor& b) {
    int n = a.dim();
    Tensor w(a.chart(), 0, 3);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                w.at({i, j, k}) = a.at({i}) * b.at({j, k}) - a.at({j}) * b.at({i, k}) +
                                  a.at({k}) * b.at({i, j});
    return w;
}

Tensor interior(const Tensor& vec, const Tensor& form2) {
    int n = vec.dim();
    Tensor out(vec.chart(), 0, 1);
    for (int j = 0; j < n; ++j) {
        RationalFunction s;
        for (int i = 0; i < n; ++i) s = s + vec.at({i}) * form2.at({i, j});
        out.at({j}) = s;
    }
    return out;
}

} // namespace ambitoric
