#pragma once

// Reference values computed once by tests/oracles/compute_golden.py
// (numpy dense kernels, mpmath at 60 digits for the analytic pipeline) and
// frozen here.
namespace golden {

inline constexpr double glauber_up_sum2_T2 = 0.8807970779778823;
inline constexpr double metropolis_flip_dE4_T2 = 0.1353352832366127;
inline constexpr double entropy_quarter = 0.8112781244591328;
inline constexpr double mi_symmetric_04_01 = 0.2780719051126379;
inline constexpr double idt_example = 27.850269756043122; // eps 1e-3, I1 0.5, I-hat 0.8

inline constexpr double cavity_rho_4reg_T2 = 0.7299702173761685;
inline constexpr double unit_up_4reg_T2 = 0.7723914574870692;

// 3-node path, J = 1, T = 2, lag of 3 random-site steps
inline constexpr double path3_glauber_center = 0.2650581134693981;
inline constexpr double path3_glauber_leaf = 0.18193981906317092;
inline constexpr double path3_metropolis_center = 0.15037090338136316;
inline constexpr double path3_metropolis_leaf = 0.10731796717068676;

// Two coupled units at stationarity, one heat-bath resample of the second.
inline constexpr double pair_resample_mi = 0.1600584620168306;

// Broken-branch cavity rho, power law gamma = 1.6 on [1, 77], J = 1.
struct RhoAtT {
    double temperature;
    double rho;
};
inline constexpr RhoAtT cavity_rho_gamma16[] = {
    {2.0, 0.928949401240752},   {2.5, 0.9207114154702198},  {2.75, 0.9167202532182444},
    {9.0, 0.8316083408303299},  {12.0, 0.7930131180918667}, {14.0, 0.7655283336536932},
};

} // namespace golden
