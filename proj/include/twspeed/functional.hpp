#pragma once

#include <vector>

namespace twspeed {

// Half-widths and shape parameters of the positive and negative semi-waves.
// p = 0 gives the polynomial wave, p > 0 the rational one.
struct SemiWaveProfile {
    double x1 = 0.0;
    double x2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;

    double period() const { return 2.0 * (x1 + x2); }
    void validate() const;
};

// Smooth piece of a compactly supported function with fixed sign inside.
struct Piece {
    double lo = 0.0;
    double hi = 0.0;
    int sign = 0;
};

// A compactly supported, piecewise smooth C^1 function.
class CompactFunction {
public:
    virtual ~CompactFunction() = default;
    virtual double value(double x) const = 0;
    virtual double d1(double x) const = 0;
    virtual double d2(double x) const = 0;
    // Pieces covering the support, ordered left to right.
    virtual const std::vector<Piece>& pieces() const = 0;
};

// Periodic semi-wave train damped by 1 - x^2/s_n^2 on [-s_n, s_n].
class TestFunction final : public CompactFunction {
public:
    TestFunction(SemiWaveProfile profile, int n);

    double value(double x) const override;
    double d1(double x) const override;
    double d2(double x) const override;
    const std::vector<Piece>& pieces() const override { return pieces_; }

    const SemiWaveProfile& profile() const { return profile_; }
    int n() const { return n_; }
    double support() const { return s_; }
    // Interior junction points, where adjacent semi-waves meet.
    std::vector<double> junctions() const;

private:
    struct Local {
        double wave[3];  // semi-wave value and two derivatives
    };
    Local local(double x) const;
    double eval(double x, int order) const;

    SemiWaveProfile profile_;
    int n_;
    double s_;
    std::vector<Piece> pieces_;
};

// -4 cos^3(x/sqrt5)/sqrt(5 sqrt5 pi) on [-sqrt5 pi/2, sqrt5 pi/2]; unit L2 norm.
class CubedCosine final : public CompactFunction {
public:
    CubedCosine();
    double value(double x) const override;
    double d1(double x) const override;
    double d2(double x) const override;
    const std::vector<Piece>& pieces() const override { return pieces_; }
    double half_width() const;

private:
    std::vector<Piece> pieces_;
};

struct QuadratureResult {
    double vpos_sq = 0.0;
    double vneg_sq = 0.0;
    double dv_sq_pos = 0.0;
    double dv_sq_neg = 0.0;
    double ddv_sq_pos = 0.0;
    double ddv_sq_neg = 0.0;
};

// 32-point Gauss-Legendre on every piece.
QuadratureResult split_integrals(const CompactFunction& f);
double eval_J(double alpha, double beta, const CompactFunction& f);
double eval_J(double alpha, double beta, const QuadratureResult& q);

struct ClosedFormCoefficients {
    double G0, G1, G2, M0, M1, M2, N0, N1, N2;
};
ClosedFormCoefficients closed_form_coefficients(double x, double s);

// Per-wave integrals of a damped polynomial semi-wave centred at `centre`.
struct WaveIntegrals {
    double v_sq = 0.0;
    double dv_sq = 0.0;
    double ddv_sq = 0.0;
};
WaveIntegrals closed_form_wave(double x, double s, double centre);
// Sums closed_form_wave over all waves of a polynomial test function.
QuadratureResult closed_form_split(const SemiWaveProfile& profile, int n);

// offset 0: sum_{k=1}^{n-1} k^r; offset 1/2: sum_{k=0}^{n-1} (k+1/2)^r; r in {2, 4}.
double bernoulli_power_sum(int n, double offset, int r);

// Coefficient of n in the large-n expansion of J(alpha, beta, v_n).
double expansion_slope(const SemiWaveProfile& profile, double alpha, double beta);

struct ExpansionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
    std::vector<int> n_values;
    std::vector<double> J_values;
};

// Fits J(alpha, beta, v_n) = slope*n + intercept on the upper half of [n_lo, n_hi].
ExpansionFit verify_expansion(const SemiWaveProfile& profile, double alpha, double beta, int n_lo,
                              int n_hi);

}  // namespace twspeed
