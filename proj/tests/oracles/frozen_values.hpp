#pragma once

// Generated by tests/oracles/generate.py (mpmath, 30 digits).

namespace zetalab::oracle {

inline constexpr double kTheta100 = 87.972165231787219625;
inline constexpr double kThetaZero = 17.845599540410860817;
inline constexpr double kZ30 = 0.59602851923988495532;
inline constexpr double kZ50 = -0.34073500595502498275;
inline constexpr double kZ100 = 2.692697056664463475;
inline constexpr double kZ500 = 1.4724478510550852727;
inline constexpr double kZ1000_5 = 2.5492611355555555643;
inline constexpr double kAbsZetaHalf = 1.4603545088095868129;
inline constexpr double kZero1 = 14.13472514173469379;
inline constexpr double kZero2 = 21.022039638771554993;
inline constexpr double kZero3 = 25.010857580145688763;
inline constexpr double kHalfTransformZero = 0.82662315438194408471;
inline constexpr double kRho = 2.3768923489103573534;
inline constexpr double kGamma = 0.468621455996934547;
inline constexpr double kPowerTransformZero1 = 2.5066282746310005024;
inline constexpr double kPowerTransformOne1 = 1.5203469010662808056;
inline constexpr double kPowerTransformZero2 = 2.5636933520408475729;
inline constexpr double kPowerTransformOne2 = 1.7971007368239381558;
inline constexpr double kPowerTransformZero3 = 2.5011427429443560828;
inline constexpr double kPowerTransformOne3 = 1.8439543595611057113;
inline constexpr double kRational13TransformOne = 3.1025776142825953524e-27;
inline constexpr double kMaxAbsZeta0to20 = 2.3405510299088180828;
inline constexpr double kArgmax0to20 = 17.882582076936682719;
inline constexpr double kMaxAbsZeta100to110 = 5.193289800756337975;
inline constexpr double kArgmax100to110 = 108.98679088029364871;
inline constexpr double kTauGaussianLnlnH10 = 7.7252721285199039059;
inline constexpr double kMertensTheta10 = 0.4276554390468733597;

}  // namespace zetalab::oracle
