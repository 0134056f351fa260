// Chebyshev coefficient tables for the Riemann-Siegel correction terms
// C_j(p), j = 0..4, on p in [0,1] (Clenshaw variable x = 2p-1).
// Obtained by Richardson extrapolation of the main-sum remainder along
// t_N = 2*pi*(N+p)^2 against a high-precision Z reference, then fitted on a
// 64-node Lobatto grid; trailing coefficients below 5e-19 are dropped.
#include "zetagap/zfunction.hpp"

namespace zetagap::detail {

const double kRsCheb0[] = {
    0.6426672862397683,
    2.8997984002289343e-17,
    0.27197299999785507,
    -5.963715794069235e-18,
    0.010738605819340283,
    2.0036287747410762e-18,
    -0.0013743815296336614,
    -6.018475618391299e-19,
    -0.00012468221880320676,
    1.4864158482406347e-19,
    -5.764599706783144e-07,
    -2.6806828342020894e-20,
    2.72806742958049e-07,
    2.048184110122235e-21,
    8.077953059499713e-09,
    3.9946294104315886e-22,
    -2.088460806886437e-10,
    -1.2184513749514585e-22,
    -1.311556185473049e-11,
    6.901181313021688e-24,
    -1.4207987229921443e-14,
    1.2278452780901404e-24,
    1.0271701357929366e-14,
    -1.1300772383833402e-25,
    1.3974598821095508e-16,
    -7.203145121802763e-27,
    -4.484118734140316e-18,
};
const int kRsCheb0Size = 27;

const double kRsCheb1[] = {
    7.677992250831235e-16,
    0.010697913920997611,
    5.944960422201983e-16,
    0.017170651243379007,
    3.7524202037070954e-17,
    0.0027932111497880967,
    -1.6921698558115038e-17,
    -3.637565371916274e-05,
    -1.1112872050238916e-19,
    -2.710895523117866e-05,
    1.5123619189244326e-18,
    -1.0483749866702537e-06,
    -6.4583554060438445e-19,
    5.8864671664886005e-08,
    1.3510152521712263e-19,
    4.322967268429731e-09,
    -1.0402817966107877e-20,
    -1.1369591565644417e-11,
    -1.4243558916602428e-21,
    -6.699833911660941e-12,
    3.2226880214744347e-22,
    -1.0079997675342665e-13,
    -2.0984711041309807e-24,
    5.152488030303264e-15,
    -2.6611209952029154e-24,
    1.5216954603007956e-16,
    4.9274319933524256e-26,
    -1.8619465913777813e-18,
};
const int kRsCheb1Size = 28;

const double kRsCheb2[] = {
    0.003146115853934586,
    4.216701082857555e-13,
    -0.0023087838845727163,
    -8.924137556846814e-14,
    5.769820766323823e-05,
    2.9452870489415475e-14,
    0.00035238862023823623,
    -8.820908102936583e-15,
    2.524666745860885e-05,
    2.184657828790739e-15,
    -3.4428211972881843e-06,
    -3.963162713892195e-16,
    -3.535074556165965e-07,
    3.120436109351046e-17,
    3.730830173739048e-09,
    5.619380805314106e-18,
    1.2776951872714375e-09,
    -1.7685178123391526e-18,
    2.1874616293768206e-11,
    1.0383950703231513e-19,
    -1.914141120015684e-12,
    1.7407571055577217e-20,
    -6.56288306553149e-14,
    -1.6534943452330298e-21,
    1.2586011030434737e-15,
    -1.0062195135752942e-22,
    8.140076120947357e-17,
};
const int kRsCheb2Size = 27;

const double kRsCheb3[] = {
    2.074758067730861e-12,
    7.123254397066659e-05,
    1.5985236841454109e-12,
    0.00023234305689943005,
    1.9174035498744635e-13,
    -0.0001292991217355805,
    -7.969418910491261e-14,
    1.8074496796587046e-05,
    7.156213362716677e-15,
    6.526185092252892e-06,
    3.016133932758618e-15,
    -1.1696363650835137e-07,
    -1.7399024093466201e-15,
    -7.349476264481619e-08,
    4.0888455710357774e-16,
    -1.7750912466893081e-09,
    -3.9093956377069055e-17,
    2.5555537249679623e-10,
    -2.8569964891051476e-18,
    1.1376632045236362e-11,
    9.372856485859578e-19,
    -3.349871334544368e-13,
    -2.49656038757604e-20,
    -2.5537307779712517e-14,
    -6.880854964966849e-21,
    6.766928200235107e-17,
    2.6958836060765106e-22,
    2.976852141507848e-17,
};
const int kRsCheb3Size = 28;

const double kRsCheb4[] = {
    0.00016765740570396666,
    4.81309858293643e-10,
    -0.00022728772535661115,
    -1.0489617934845222e-10,
    6.477386591706395e-05,
    3.396597045987118e-11,
    -8.492198092772204e-06,
    -1.0133564344749845e-11,
    -2.6161410197225924e-06,
    2.516556097826091e-12,
    8.336764481872385e-07,
    -4.590179769723561e-13,
    6.324707945740964e-08,
    3.712556768446805e-14,
    -1.005995939184647e-08,
    6.197222121121878e-15,
    -7.822666448763963e-10,
    -2.0099442381971307e-15,
    3.1676629672999e-11,
    1.214947413337338e-16,
    3.5006721777758924e-12,
    1.939286700810979e-17,
    -1.4313912275385924e-14,
    -1.8857309705443357e-18,
    -7.269253062651602e-15,
    -1.1108943641485647e-19,
    -8.781403817558179e-17,
    9.520642734550067e-21,
    8.149709219101788e-18,
};
const int kRsCheb4Size = 29;

}  // namespace zetagap::detail
