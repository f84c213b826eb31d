#ifndef GVLP_HERMITE_HPP
#define GVLP_HERMITE_HPP

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gvlp/geometry.hpp"
#include "gvlp/quadrature.hpp"

namespace gvlp {

/// d-tuple of non-negative integers; |nu| is the entry sum.
struct MultiIndex {
    std::vector<int> entries;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : entries(std::move(e)) {}

    int order() const {
        int s = 0;
        for (int e : entries) s += e;
        return s;
    }
    int dim() const { return static_cast<int>(entries.size()); }

    auto operator<=>(const MultiIndex&) const = default;
};

/// All multi-indices of dimension dim with |nu| <= max_order, in a fixed
/// deterministic order (graded, then lexicographic).
std::vector<MultiIndex> multi_indices_up_to(int dim, int max_order);

/// Normalized Hermite values hhat_0(x) .. hhat_max(x) by the stable
/// recurrence hhat_{n+1} = x*sqrt(2/(n+1))*hhat_n - sqrt(n/(n+1))*hhat_{n-1}.
/// Orthonormal in L^2(gamma_1); hhat_1(x) = sqrt(2) x.
std::vector<double> hermite_axis_values(int max_order, double x);

/// hhat_nu(x) = prod_i hhat_{nu_i}(x_i).
double hermite_normalized_eval(const MultiIndex& nu, std::span<const double> x);

/// Finite Hermite series sum c_nu hhat_nu. Coefficients below 1e-15 in
/// magnitude are dropped on insertion; absent indices read as zero.
class HermiteExpansion {
  public:
    static constexpr double kCoeffTolerance = 1e-15;

    explicit HermiteExpansion(int dim) : dim_(dim) {}

    /// Expansion with a single unit coefficient at nu.
    static HermiteExpansion basis(const MultiIndex& nu);

    int dim() const { return dim_; }
    int max_order() const;
    bool empty() const { return coeffs_.empty(); }

    double coeff(const MultiIndex& nu) const;
    void set_coeff(const MultiIndex& nu, double c);
    void add_coeff(const MultiIndex& nu, double c) { set_coeff(nu, coeff(nu) + c); }

    const std::map<MultiIndex, double>& coeffs() const { return coeffs_; }

    HermiteExpansion& operator+=(const HermiteExpansion& other);
    HermiteExpansion& operator-=(const HermiteExpansion& other);
    HermiteExpansion& operator*=(double c);

    /// Rescale each coefficient by multiplier(|nu|); this is how the spectral
    /// semigroup paths act.
    HermiteExpansion apply_degree_multiplier(const std::function<double(int)>& m) const;

    /// Interchange format: {"dim": d, "coeffs": [{"nu": [...], "c": r}, ...]}.
    std::string to_json_string() const;
    static HermiteExpansion from_json_string(const std::string& text);

  private:
    int dim_;
    std::map<MultiIndex, double> coeffs_;
};

inline HermiteExpansion operator+(HermiteExpansion a, const HermiteExpansion& b) { return a += b; }
inline HermiteExpansion operator-(HermiteExpansion a, const HermiteExpansion& b) { return a -= b; }
inline HermiteExpansion operator*(double c, HermiteExpansion a) { return a *= c; }

/// Coefficients <f, hhat_nu>_{gamma_d} for |nu| <= max_order, by a single
/// tensor quadrature sweep. Exact when f is a polynomial and the rule covers
/// deg(f) + max_order.
HermiteExpansion expand(const RealFn& f, int dim, int max_order, const QuadratureRule& rule);

/// J_k: keep exactly the coefficients with |nu| = k.
HermiteExpansion project_degree(const HermiteExpansion& e, int k);

double eval_expansion(const HermiteExpansion& e, std::span<const double> x);

/// eval_expansion as a RealFn (shares the expansion by value).
RealFn expansion_fn(HermiteExpansion e);

}  // namespace gvlp

#endif
