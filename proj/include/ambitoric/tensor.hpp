#ifndef AMBITORIC_TENSOR_HPP
#define AMBITORIC_TENSOR_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "ambitoric/ratfun.hpp"

namespace ambitoric {

/// Coordinate chart.  Coordinates bound to a polynomial variable are
/// "active" (components may depend on them); unbound ones are torus-like
/// directions every component is constant along.
struct Chart {
    std::vector<std::string> names;        // n coordinate names, n in {2,4}
    std::vector<std::optional<int>> vars;  // per-coordinate polynomial variable
    int orientation = +1;

    Chart() = default;
    Chart(std::vector<std::string> names_, std::vector<std::optional<int>> vars_,
          int orientation_ = +1);

    int dim() const { return static_cast<int>(names.size()); }

    friend bool operator==(const Chart& a, const Chart& b) {
        return a.names == b.names && a.vars == b.vars && a.orientation == b.orientation;
    }
    friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }
};

enum class Sym { none, symmetric, antisymmetric };

/// Tensor field on a chart with rational-function components.
/// Component storage is dense, row-major over slots (contravariant slots
/// first).  Values are immutable in spirit: operations return new tensors.
class Tensor {
public:
    Tensor() = default;
    Tensor(Chart chart, int contravariant, int covariant, Sym sym = Sym::none);

    const Chart& chart() const { return chart_; }
    int contravariant() const { return contra_; }
    int covariant() const { return cov_; }
    int rank() const { return contra_ + cov_; }
    int dim() const { return chart_.dim(); }
    Sym sym() const { return sym_; }
    void set_sym(Sym s) { sym_ = s; }

    RationalFunction& at(std::initializer_list<int> idx);
    const RationalFunction& at(std::initializer_list<int> idx) const;
    RationalFunction& flat(std::size_t i) { return comp_[i]; }
    const RationalFunction& flat(std::size_t i) const { return comp_[i]; }
    std::size_t size() const { return comp_.size(); }

    bool is_zero() const;

    Tensor operator-() const;
    friend Tensor operator+(const Tensor& a, const Tensor& b);
    friend Tensor operator-(const Tensor& a, const Tensor& b);
    Tensor scaled(const RationalFunction& f) const;

    /// Declared symmetry holds componentwise (covariant rank-2 only).
    bool symmetry_ok() const;

    /// Derivative of every component along coordinate `i` (zero for
    /// torus-like coordinates).
    RationalFunction coord_derivative(const RationalFunction& f, int i) const;

    std::string str() const;

private:
    Chart chart_;
    int contra_ = 0, cov_ = 0;
    Sym sym_ = Sym::none;
    std::vector<RationalFunction> comp_;

    std::size_t index(std::initializer_list<int> idx) const;
};

/// Symmetric (0,2) metric helpers.
RationalFunction metric_det(const Tensor& g);
/// Inverse metric as a (2,0) tensor; throws degenerate_error if det == 0.
Tensor metric_inverse(const Tensor& g);

/// d of an antisymmetric (0,k) tensor, k in {1,2}.
Tensor exterior_derivative(const Tensor& form);

/// Wedge of 1-forms / (1-form, 2-form).
Tensor wedge11(const Tensor& a, const Tensor& b);
Tensor wedge12(const Tensor& a, const Tensor& b);

/// Interior product of a vector with a 2-form.
Tensor interior(const Tensor& vec, const Tensor& form2);

} // namespace ambitoric

#endif
