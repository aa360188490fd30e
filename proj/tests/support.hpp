#pragma once

#include <complex>
#include <cstdint>

#include "zetanu/types.hpp"

namespace testing {

using zetanu::cplx;

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// zeta, zeta', zeta'' and nu at selected points, from a 30-digit mpmath run.
struct Reference {
  cplx s, z0, z1, z2, nu;
};

inline constexpr Reference kReference[] = {
    {{2.0, 0.0}, {1.64493406684822641e+00, 0.0}, {-9.37548254315843765e-01, 0.0}, {1.98928023429890111e+00, 0.0},
     {2.39323809673539811e+00, 0.0}},
    {{0.3, 20.0}, {2.68994415753986915e-01, -1.28842341804830385e+00}, {9.01540324277633642e-01, 1.24548664666385456e+00},
     {-1.04155871764858055e+00, -1.34836752845974051e+00}, {-1.27897974781144130e+00, -1.26644756308247097e+00}},
    {{-3.5, 7.0}, {-4.13333071217888204e-01, 1.84182646197012279e+00}, {1.10204892451047365e+00, -2.25450564345190479e-01},
     {-5.90688614543084634e-01, -4.63006893235470895e-01}, {-6.67543878329284746e-02, -3.99654755940060002e-01}},
    {{3.0, 100.0}, {1.09579857341499731e+00, -2.84642497792269508e-02}, {-6.00606489283238495e-02, 1.97910085670640716e-02},
     {4.12555627838229605e-02, -1.19428586399896054e-02}, {4.16522448029496284e-02, -1.18839544690911309e-02}},
    {{-2.0, 50.0}, {-1.39800987730831508e+02, -7.49506861755963172e+01}, {2.93475617960988984e+02, 1.76700760153210865e+02},
     {-6.09343525891909735e+02, -4.02347881490296231e+02}, {1.25797289219454768e+02, -1.79538293427328335e+03}},
    {{0.7, 1000.0}, {7.84054443103688659e-01, 3.74828892328902930e-01}, {1.14691442265538335e+00, -1.82855003708739572e+00},
     {-6.71677276981159377e+00, 7.04400650414081397e+00}, {-5.87843014375595363e+00, 7.19962491965460938e+00}},
    {{2.0, 15000.0}, {9.02587541363920276e-01, 3.00119720221526942e-01}, {1.77144030387126228e-01, -1.67599612398717096e-01},
     {-2.92587029526887643e-01, -2.16026025778397746e-02}, {-2.60892417999523063e-01, -4.79308357265936028e-02}},
    {{-4.5, -0.5}, {-4.27529247449458250e-03, -2.11199395823686740e-03}, {4.47292563061297849e-03, -4.88706114869855764e-03},
     {1.09963511364984286e-02, 1.46768129584709116e-03}, {-4.00365802572010199e-05, 1.42199281787460467e-05}},
    {{0.5, -3.0}, {5.32736670974232829e-01, 7.88965134258333839e-02}, {1.91759884092721378e-01, 7.31357288659289367e-02},
     {1.19338041444079883e-02, -5.67675935008383134e-02}, {-2.05866780157617051e-02, -5.73496410226890033e-02}},
};

}  // namespace testing
