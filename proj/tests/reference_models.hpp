#pragma once

// Independent closed-form implementations of the benchmark models, written as
// literal arithmetic in the published term order. These never touch the
// polynomial engine; the fidelity checks compare the two routes.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace refmodel {

inline double btms1_f1(double x1, double x2, double x3) {
  return 0.12313 - 0.1399*x1 + 0.9503*x2
         + 0.9936*x3 - 94.9058*x1*x2 + 0.1523*x1*x3
         + 1.6680e-6*x2*x3 - 177.3068*x1*x1 + 4.8611e-7*x2*x2
         - 0.0026*x1*x2*x3 + 2379.7945*x1*x1*x2 + 3.4104*x1*x1*x3;
}

inline double btms1_f2(double x1, double x2, double x3) {
  return 0.0451 + 46.8433*x1 + 0.9258*x2
         - 0.0036*x3 - 88.6916*x1*x2 - 1.7198*x1*x3
         + 0.0007*x2*x3 - 1947.0156*x1*x1 + 1.1638e-6*x2*x2
         + 0.000013*x3*x3 - 0.0271*x1*x2*x3 + 2190.9304*x1*x1*x2
         + 74.0804*x1*x1*x3 - 0.00006*x1*x2*x2;
}

inline double btms1_f3(double x1, [[maybe_unused]] double x2, double x3) {
  return 17.6338 + 10927.0303*x1 - 0.4822*x3
         - 116.4686*x1*x3 + 1865850*x1*x1;
}

inline double btms2_f1(double x1, double x2, double x3, double x4) {
  return 81.01683 - 0.866333*x1 - 0.480056*x2
         - 3.91737*x3 - 198.02083*x4 + 0.002183*x1*x2
         + 0.009344*x1*x3 + 1.21563*x1*x4 + 0.0179*x2*x3
         - 0.391667*x2*x4 - 4.98750*x3*x4 + 0.011359*x1*x1
         + 0.002449*x2*x2 + 0.225781*x3*x3 + 1499.0625*x4*x4;
}

inline double btms2_f2(double x1, double x2, double x3, double x4) {
  return 27.31163 - 0.838542*x1 - 0.291767*x2
         - 2.11342*x3 + 90.08333*x4 + 0.002429*x1*x2
         + 0.016469*x1*x3 + 0.140625*x1*x4 + 0.007333*x2*x3
         - 0.183333*x2*x4 - 1.94375*x3*x4 + 0.011346*x1*x1
         + 0.001407*x2*x2 + 0.108792*x3*x3 - 701.45833*x4*x4;
}

inline double btms2_f3(double x1, double x2, double x3, double x4) {
  return 0.569838 - 0.006269*x1 - 0.001207*x2
         - 0.019008*x3 - 0.001125*x4 + 0.000154*x1*x2
         + 0.00145*x1*x3 + 0.000031*x1*x4 + 0.000451*x2*x3
         + 0.000033*x2*x4 - 0.00025*x3*x4 + 7.70833e-6*x1*x1
         + 2.37037e-7*x2*x2 - 0.001966*x3*x3 - 0.004167*x4*x4;
}

inline double btms3_f1(double x1, double x2, double x3, double x4) {
  return 46.61549 - 0.008793*x1 + 0.032083*x2
         + 0.425*x3 - 3.08296*x4 + 0.063125*x1*x3
         - 0.06875*x2*x3 - 1.96875*x3*x4 - 0.000272*x1*x1
         + 2.28962*x4*x4;
}

inline double btms3_f2(double x1, double x2, double x3, double x4) {
  return 0.879167 + 0.013625*x1 + 0.16333*x2
         + 5.53333*x3 + 1.48542*x4 - 0.013125*x1*x4
         - 0.045*x2*x4 - 3.125*x3*x3 + 0.46875*x4*x4;
}

inline double btms3_f3([[maybe_unused]] double x1, double x2, double x3, double x4) {
  return 729.38807 + 0.3385*x2 - 1845.5756*x3
         - 460.48423*x4 + 724.5625*x3*x4 + 1124.54464*x3*x3
         + 48.57366*x4*x4;
}

inline double btms3_f4(double x1, double x2, double x3, [[maybe_unused]] double x4) {
  return 100.0 - (65.20346 + 0.179833*x1 + 0.719974*x2
         - 25.15833*x3 - 0.0022*x1*x2 + 0.1275*x1*x3
         + 0.285*x2*x3 - 0.008856*x2*x2);
}

inline double btms4_f1(double x1, [[maybe_unused]] double x2, double x3, double x4, double x5) {
  return 1279 + 86*x1 - 443*x3
         + 18*x4 + 9223*x5 + 21.98*x3*x3
         + 3887*x5*x5 - 314*x1*x5 + 92.8*x3*x5
         - 566*x4*x5;
}

inline double btms4_f2(double x1, double x2, double x3, double x4, double x5) {
  return 52.096 - 0.463*x1 - 0.1498*x2
         - 0.1197*x3 - 0.699*x4 - 4.432*x5
         + 1.481*x5*x5 + 0.1150*x1*x4 + 0.01050*x2*x3
         + 0.1033*x2*x5 - 0.0835*x3*x5;
}

inline double btms4_f3(double x1, double x2, double x3, double x4, double x5) {
  return 14.156 - 0.2739*x1 + 0.1121*x2
         - 0.2305*x3 - 0.715*x4 + 0.091*x5
         - 0.00823*x2*x2 + 0.007437*x3*x3 + 0.0559*x4*x4
         - 0.8563*x5*x5 + 0.06875*x1*x4 + 0.007500*x2*x3
         + 0.08333*x2*x5 - 0.06650*x3*x5 - 0.0425*x4*x5;
}

inline double btms5_f1(double x1, double x2, double x3) {
  return 4613.36904 + 209.50266*x1 - 3.50839*x2
         - 31.98168*x3 + 0.361111*x1*x2 - 0.768056*x1*x3
         + 0.006746*x2*x3 + 1.99043*x1*x1 + 0.017178*x2*x2
         + 0.059304*x3*x3;
}

inline double btms5_f2(double x1, double x2, double x3) {
  return -1833.39075 - 52.36404*x1 - 6.27092*x2
         + 13.31269*x3 - 0.253968*x1*x2 + 0.141667*x1*x3
         + 0.024603*x2*x3 + 1.51903*x1*x1 - 0.009875*x2*x2
         - 0.02381*x3*x3;
}

inline double btms6_f1(double x1, double x2, double x3) {
  return 1.90626712e-4*x1*x1 - 1.28889451e-3*x1*x2 - 1.15404771e-1*x1*x3
         + 3.13023994e-4*x2*x2 + 8.56036434e-2*x2*x3 + 1.22088957e3*x3*x3
         + 8.59696045e-3*x1 - 3.94856494e-4*x2 - 1.155495e2*x3
         + 32.2404955;
}

inline double btms6_f2(double x1, double x2, double x3) {
  return -7.90143347e-3*x1*x1 + 2.35570426e-2*x1*x2 + 6.37633777e-2*x1*x3
         + 4.92003546e-3*x2*x2 - 5.68830689e-1*x2*x3 - 1.28949816e4*x3*x3
         - 3.19586641e-1*x1 - 3.38066679e-1*x2 + 1.30319958e3*x3
         + 60.5388827;
}

inline double btms7_f1(double x1, double x2, double x3, double x4) {
  return 72.10229 + 167.072*x1 - 54.5517*x2
         - 596.305*x3 + 1387.328*x4 + 1.45317*x1*x2
         - 12.3493*x1*x3 - 20.6411*x1*x4 + 7.50918*x2*x3
         - 44.9616*x2*x4 + 98.18287*x3*x4 - 3.84157*x1*x1
         + 0.460898*x2*x2 + 75.53877*x3*x3 + 1631.449*x4*x4;
}

inline double btms7_f2(double x1, double x2, double x3, double x4) {
  return 24.85276 - 0.40694*x1 - 0.0449*x2
         - 0.35387*x3 - 5.48901*x4 + 0.000356*x1*x2
         + 0.005188*x1*x3 + 0.002925*x1*x4 + 0.003644*x2*x3
         + 0.014112*x2*x4 - 0.00963*x3*x4 + 0.009482*x1*x1
         + 0.000145*x2*x2 + 0.006044*x3*x3 + 0.956175*x4*x4;
}

inline double btms8_f1(double x1, double x2, double x3, double x4) {
  return 3.51 - 1.536*x1 + 0.062*x2
         + 0.174*x3 - 0.0180*x4 + 0.3677*x1*x1
         - 0.01724*x2*x2 - 0.0278*x3*x3 + 0.000069*x4*x4
         + 0.00597*x1*x2 + 0.0049*x1*x3 - 0.00250*x1*x4
         + 0.00365*x2*x3 + 0.000716*x2*x4 - 0.00087*x3*x4;
}

inline double btms8_f2(double x1, double x2, double x3, double x4) {
  return 4940 - 4048*x1 - 70*x2
         - 1367*x3 - 14*x4 + 760*x1*x1
         + 76*x2*x2 + 267*x3*x3 - 0.11*x4*x4
         - 71*x1*x2 + 303*x1*x3 + 46.8*x1*x4
         - 65.0*x2*x3 - 3.91*x2*x4 + 0.3*x3*x4;
}

inline double btms8_f3(double x1, double x2, double x3, double x4) {
  return 27083 + 5034*x1 - 817*x2
         - 6319*x3 - 460*x4 + 923*x1*x1
         + 69*x2*x2 + 2017*x3*x3 + 3.00*x4*x4
         - 48*x1*x2 - 2805*x1*x3 + 26.4*x1*x4
         + 31*x2*x3 + 1.6*x2*x4 - 21.3*x3*x4;
}

inline double btms8_g1(double x1, double x2, double x3, double x4) {
  return 47.3 - 9.970*x1 + 0.322*x2
         + 0.545*x3 - 0.113*x4 + 2.343*x1*x1
         - 0.0772*x2*x2 - 0.106*x3*x3 + 0.00042*x4*x4
         + 0.0514*x1*x2 + 0.0932*x1*x3 - 0.00697*x1*x4
         + 0.0136*x2*x3 + 0.00219*x2*x4 - 0.00327*x3*x4;
}

inline double btms9_f1(double x1, double x2, double x3) {
  return 1.0e4 - (-33.674 + 16.72*x1 + 334.241*x2
         + 178.136*x3 + 7.145*x1*x2 - 2.523*x1*x3
         + 409.709*x2*x3 - 0.007*x1*x1 - 565.378*x2*x2
         - 395.916*x3*x3);
}

inline double btms9_f2(double x1, double x2, double x3) {
  return 0.532 + 0.032*x1 - 1.786*x2
         - 3.846*x3 - 0.008*x1*x2 - 0.024*x1*x3
         + 2.365*x2*x3 - 4.06e-5*x1*x1 + 1.849*x2*x2
         + 3.524*x3*x3;
}

inline double btms9_f3(double x1, double x2, double x3) {
  return 1.0e-8 * (-68.397 + 0.784*x1 + 107.989*x2
         + 1037.04*x3 - 1.435*x1*x2 - 6.57*x1*x3
         - 1762.27*x2*x3 - 0.001*x1*x1 - 115.21*x2*x2
         - 2301.1*x3*x3 + 3.8013*x1*x2*x3 + 0.003*x1*x1*x2
         + 0.019*x1*x1*x3 + 2.681*x1*x2*x2 + 6.498*x1*x3*x3
         + 831.428*x2*x2*x3 + 2481.38*x2*x3*x3 + 1304.18*x3*x3*x3);
}

inline double btms9_g1([[maybe_unused]] double x1, double x2, double x3) {
  return 1*x2 + 1*x3;
}

inline double btms10_f1(double x1, double x2, double x3, double x4) {
  return 71.3037 - 3.9144*x1 - 1.6696*x2
         - 0.6683*x3 - 0.4216*x4 - 0.0499*x1*x2
         + 0.0706*x1*x3 + 0.0405*x1*x4 - 0.0255*x2*x3
         + 0.0162*x2*x4 + 0.0017*x3*x4 + 0.0888*x1*x1
         + 0.3451*x2*x2 + 0.0337*x3*x3 + 0.0018*x4*x4;
}

inline double btms10_f2(double x1, double x2, double x3, double x4) {
  return 39.3227 - 2.8721*x1 - 0.7085*x2
         - 0.5715*x3 - 1.1052*x4 + 0.0289*x1*x2
         + 0.0185*x1*x3 + 0.0271*x1*x4 + 0.0106*x2*x4
         + 0.2723*x1*x1 + 0.0535*x3*x3 + 0.0095*x4*x4;
}

inline double btms10_f3(double x1, double x2, double x3, double x4) {
  return 49.0164 - 10.2271*x1 + 0.6715*x2
         + 1.6666*x3 - 0.0715*x4 + 0.1196*x1*x2
         + 0.1486*x1*x3 + 0.2467*x1*x4 + 0.6145*x2*x3
         + 0.1989*x3*x4 + 1.7310*x1*x1 + 0.3715*x3*x3;
}

inline double btms11_f1(double x1, double x2, double x3, double x4) {
  return -2.43064 + 0.243045*x1 + 0.677324*x2
         + 0.737592*x3 - 0.18472*x4 - 0.02606*x1*x2
         + 0.022396*x1*x3 + 0.004529*x1*x4 - 0.02294*x2*x3
         + 0.00055*x2*x4 + 0.004813*x3*x4 - 0.11394*x1*x1
         - 0.00341*x2*x2 - 0.01697*x3*x3 + 0.000302*x4*x4;
}

inline double btms11_f2(double x1, double x2, double x3, double x4) {
  return 96.58241 + 0.1578*x1 - 1.25045*x2
         - 2.3343*x3 - 0.12563*x4 - 0.07581*x1*x2
         + 0.049944*x1*x3 - 0.00313*x1*x4 + 0.027531*x2*x3
         - 0.00033*x2*x4 + 0.005656*x3*x4 + 0.028913*x1*x1
         + 0.011411*x2*x2 + 0.017132*x3*x3 - 0.00048*x4*x4;
}

inline double btms11_f3(double x1, double x2, double x3, double x4) {
  return 300.0 - (277.272 - 0.51318*x1 - 2.63203*x2
         - 2.6598*x3 - 0.50029*x4 - 0.00716*x1*x2
         + 0.056038*x1*x3 - 0.0782*x1*x4 - 0.01772*x2*x3
         + 0.001278*x2*x4 + 0.008648*x3*x4 + 0.046377*x1*x1
         + 0.024511*x2*x2 + 0.017802*x3*x3 + 0.001049*x4*x4);
}

inline double btms12_f1(double x1, double x2, double x3, double x4) {
  return 59.83219 + 0.12937*x1 - 0.98175*x2
         - 13.24975*x3 - 7.77460*x4 - 0.00427*x1*x2
         + 0.28775*x1*x3 - 0.06762*x1*x4 - 0.06180*x2*x3
         - 0.00740*x2*x4 + 3.93312*x3*x4 + 0.00630*x1*x1
         + 0.013343*x2*x2 + 12.80125*x3*x3 + 2.46094*x4*x4;
}

inline double btms12_f2(double x1, double x2, double x3, double x4) {
  return 20.98648 + 0.18112*x1 - 0.55020*x2
         - 2.53808*x3 - 6.25006*x4 - 0.00439*x1*x2
         + 0.10915*x1*x3 - 0.027650*x1*x4 - 0.19525*x2*x3
         + 0.026362*x2*x4 + 1.37000*x3*x4 + 0.00245*x1*x1
         + 0.00796*x2*x2 + 1.83333*x3*x3 + 1.60591*x4*x4;
}

inline std::size_t objective_count(std::string_view id) {
  if (id == "BTMS-1") return 3;
  if (id == "BTMS-2") return 3;
  if (id == "BTMS-3") return 4;
  if (id == "BTMS-4") return 3;
  if (id == "BTMS-5") return 2;
  if (id == "BTMS-6") return 2;
  if (id == "BTMS-7") return 2;
  if (id == "BTMS-8") return 3;
  if (id == "BTMS-9") return 3;
  if (id == "BTMS-10") return 3;
  if (id == "BTMS-11") return 3;
  if (id == "BTMS-12") return 2;
  throw std::invalid_argument("unknown problem id: " + std::string(id));
}

inline void objectives(std::string_view id, const double* x, double* f) {
  if (id == "BTMS-1") {
    f[0] = btms1_f1(x[0], x[1], x[2]);
    f[1] = btms1_f2(x[0], x[1], x[2]);
    f[2] = btms1_f3(x[0], x[1], x[2]);
    return;
  }
  if (id == "BTMS-2") {
    f[0] = btms2_f1(x[0], x[1], x[2], x[3]);
    f[1] = btms2_f2(x[0], x[1], x[2], x[3]);
    f[2] = btms2_f3(x[0], x[1], x[2], x[3]);
    return;
  }
  if (id == "BTMS-3") {
    f[0] = btms3_f1(x[0], x[1], x[2], x[3]);
    f[1] = btms3_f2(x[0], x[1], x[2], x[3]);
    f[2] = btms3_f3(x[0], x[1], x[2], x[3]);
    f[3] = btms3_f4(x[0], x[1], x[2], x[3]);
    return;
  }
  if (id == "BTMS-4") {
    f[0] = btms4_f1(x[0], x[1], x[2], x[3], x[4]);
    f[1] = btms4_f2(x[0], x[1], x[2], x[3], x[4]);
    f[2] = btms4_f3(x[0], x[1], x[2], x[3], x[4]);
    return;
  }
  if (id == "BTMS-5") {
    f[0] = btms5_f1(x[0], x[1], x[2]);
    f[1] = btms5_f2(x[0], x[1], x[2]);
    return;
  }
  if (id == "BTMS-6") {
    f[0] = btms6_f1(x[0], x[1], x[2]);
    f[1] = btms6_f2(x[0], x[1], x[2]);
    return;
  }
  if (id == "BTMS-7") {
    f[0] = btms7_f1(x[0], x[1], x[2], x[3]);
    f[1] = btms7_f2(x[0], x[1], x[2], x[3]);
    return;
  }
  if (id == "BTMS-8") {
    f[0] = btms8_f1(x[0], x[1], x[2], x[3]);
    f[1] = btms8_f2(x[0], x[1], x[2], x[3]);
    f[2] = btms8_f3(x[0], x[1], x[2], x[3]);
    return;
  }
  if (id == "BTMS-9") {
    f[0] = btms9_f1(x[0], x[1], x[2]);
    f[1] = btms9_f2(x[0], x[1], x[2]);
    f[2] = btms9_f3(x[0], x[1], x[2]);
    return;
  }
  if (id == "BTMS-10") {
    f[0] = btms10_f1(x[0], x[1], x[2], x[3]);
    f[1] = btms10_f2(x[0], x[1], x[2], x[3]);
    f[2] = btms10_f3(x[0], x[1], x[2], x[3]);
    return;
  }
  if (id == "BTMS-11") {
    f[0] = btms11_f1(x[0], x[1], x[2], x[3]);
    f[1] = btms11_f2(x[0], x[1], x[2], x[3]);
    f[2] = btms11_f3(x[0], x[1], x[2], x[3]);
    return;
  }
  if (id == "BTMS-12") {
    f[0] = btms12_f1(x[0], x[1], x[2], x[3]);
    f[1] = btms12_f2(x[0], x[1], x[2], x[3]);
    return;
  }
  throw std::invalid_argument("unknown problem id: " + std::string(id));
}

// Values of the constraint expressions, in descriptor order.
inline std::size_t constraint_values(std::string_view id, const double* x, double* g) {
  if (id == "BTMS-8") {
    g[0] = btms8_g1(x[0], x[1], x[2], x[3]);
    return 1;
  }
  if (id == "BTMS-9") {
    g[0] = btms9_g1(x[0], x[1], x[2]);
    return 1;
  }
  if (id == "BTMS-10") {
    g[0] = btms10_f1(x[0], x[1], x[2], x[3]);
    g[1] = btms10_f1(x[0], x[1], x[2], x[3]);
    g[2] = btms10_f2(x[0], x[1], x[2], x[3]);
    g[3] = btms10_f2(x[0], x[1], x[2], x[3]);
    g[4] = btms10_f3(x[0], x[1], x[2], x[3]);
    g[5] = btms10_f3(x[0], x[1], x[2], x[3]);
    return 6;
  }
  if (id == "BTMS-12") {
    g[0] = btms12_f1(x[0], x[1], x[2], x[3]);
    g[1] = btms12_f1(x[0], x[1], x[2], x[3]);
    g[2] = btms12_f2(x[0], x[1], x[2], x[3]);
    g[3] = btms12_f2(x[0], x[1], x[2], x[3]);
    return 4;
  }
  (void)x;
  (void)g;
  return 0;
}

}  // namespace refmodel
