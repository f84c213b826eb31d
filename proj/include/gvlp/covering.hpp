#ifndef GVLP_COVERING_HPP
#define GVLP_COVERING_HPP

#include <span>
#include <string>
#include <vector>

#include "gvlp/geometry.hpp"

namespace gvlp {

/// The sqrt(k)-shell ball family: B(0,1) plus, for each shell k = 1..k_max,
/// balls centered on the sphere of radius (sqrt(k)+sqrt(k+1))/2 with diameter
/// sqrt(k+1)-sqrt(k) = 1/(2|center|). Same-shell balls are pairwise disjoint;
/// the doubled family covers up to built_radius().
struct CoveringFamily {
    struct Member {
        Ball ball;
        int shell = 0;  // 0 is the base ball B(0,1)
    };

    int dim = 1;
    int k_max = 1;
    std::vector<Member> balls;  // base first, then shells in order
    double scale_tilde = 2.0;
    double scale_hat = 0.0;  // C_n, computed at build

    double built_radius() const;
    std::string to_json_string() const;
};

enum class BallScaling { none, tilde, hat };

/// dim must be 1 or 2 (3 is rejected), k_max >= 1.
CoveringFamily build_covering(int dim, int k_max);

/// Fraction of samples covered by B(0,1) together with the tilde-scaled shell
/// balls. Samples beyond the built radius violate the precondition.
double coverage_check(const CoveringFamily& family, std::span<const Vec> samples);

/// Maximum over the samples of the number of scaled balls containing the
/// sample. tilde scaling doubles shell balls only; hat scales every ball by C_n.
int overlap_count(const CoveringFamily& family, std::span<const Vec> samples,
                  BallScaling scaling);

struct BallStats {
    double density_ratio = 1.0;   // max over pairs of e^{-|x|^2} / e^{-|y|^2}
    double hull_constant = 0.0;   // smallest c with B_h(x) within c*B for samples
};

BallStats ball_stats(const Ball& ball, std::span<const Vec> samples_in_ball);

}  // namespace gvlp

#endif
