#pragma once

#include <algorithm>

namespace corrpm::detail {

// All three convolution kernels are partial derivatives of one trilinear
// form over a gather-side field G[cg,gh,gw], a scatter-side field
// S[cs,sh,sw] and a weight block W[cg,cs,k,k]:
//
//   T = sum G[cg,oh,ow] * W[cg,cs,kh,kw] * S[cs, oh*stride-pad+kh*dil, ...]
//
// conv2d forward is dT/dG, its input gradient (and transposed_conv2d
// forward) is dT/dS, and both weight gradients are dT/dW. Sharing the
// geometry makes <conv(x),y> == <x, tconv(y)> hold by construction.
struct ConvGeom {
    int cg, cs;   // gather-side / scatter-side channel counts
    int gh, gw;   // gather-side spatial extents (the conv output)
    int sh, sw;   // scatter-side spatial extents (the conv input)
    int k;
    int stride;
    int pad;
    int dil;
};

inline int div_floor(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline int div_ceil(int a, int b) { return a > 0 ? (a + b - 1) / b : -(-a / b); }

inline int conv_out_extent(int in, int k, int stride, int pad, int dil) {
    return (in + 2 * pad - dil * (k - 1) - 1) / stride + 1;
}

// Valid gather-index range [lo,hi] for one kernel tap so the matching
// scatter index stays in bounds.
inline void tap_range(int kk, const ConvGeom& g, int s_extent, int g_extent, int& lo, int& hi) {
    lo = std::max(0, div_ceil(g.pad - kk * g.dil, g.stride));
    hi = std::min(g_extent - 1, div_floor(s_extent - 1 + g.pad - kk * g.dil, g.stride));
}

/// G[cg,oh,ow] += sum_{cs,kh,kw} W * S  (conv forward / tconv input grad)
inline void conv_gather(double* G, const double* S, const double* W, const ConvGeom& g) {
    for (int cg = 0; cg < g.cg; ++cg) {
        for (int cs = 0; cs < g.cs; ++cs) {
            const double* wblk = W + (static_cast<std::size_t>(cg) * g.cs + cs) * g.k * g.k;
            for (int kh = 0; kh < g.k; ++kh) {
                int ohlo, ohhi;
                tap_range(kh, g, g.sh, g.gh, ohlo, ohhi);
                if (ohhi < ohlo) continue;
                for (int kw = 0; kw < g.k; ++kw) {
                    const double wv = wblk[kh * g.k + kw];
                    if (wv == 0.0) continue;
                    int owlo, owhi;
                    tap_range(kw, g, g.sw, g.gw, owlo, owhi);
                    if (owhi < owlo) continue;
                    const int n = owhi - owlo + 1;
                    for (int oh = ohlo; oh <= ohhi; ++oh) {
                        const int ih = oh * g.stride - g.pad + kh * g.dil;
                        const int iw0 = owlo * g.stride - g.pad + kw * g.dil;
                        const double* srow = S + (static_cast<std::size_t>(cs) * g.sh + ih) * g.sw + iw0;
                        double* grow = G + (static_cast<std::size_t>(cg) * g.gh + oh) * g.gw + owlo;
                        if (g.stride == 1) {
                            for (int i = 0; i < n; ++i) grow[i] += wv * srow[i];
                        } else {
                            for (int i = 0; i < n; ++i) grow[i] += wv * srow[i * g.stride];
                        }
                    }
                }
            }
        }
    }
}

/// S[cs,ih,iw] += sum_{cg,kh,kw} W * G  (conv input grad / tconv forward)
inline void conv_scatter(double* S, const double* G, const double* W, const ConvGeom& g) {
    for (int cg = 0; cg < g.cg; ++cg) {
        for (int cs = 0; cs < g.cs; ++cs) {
            const double* wblk = W + (static_cast<std::size_t>(cg) * g.cs + cs) * g.k * g.k;
            for (int kh = 0; kh < g.k; ++kh) {
                int ohlo, ohhi;
                tap_range(kh, g, g.sh, g.gh, ohlo, ohhi);
                if (ohhi < ohlo) continue;
                for (int kw = 0; kw < g.k; ++kw) {
                    const double wv = wblk[kh * g.k + kw];
                    if (wv == 0.0) continue;
                    int owlo, owhi;
                    tap_range(kw, g, g.sw, g.gw, owlo, owhi);
                    if (owhi < owlo) continue;
                    const int n = owhi - owlo + 1;
                    for (int oh = ohlo; oh <= ohhi; ++oh) {
                        const int ih = oh * g.stride - g.pad + kh * g.dil;
                        const int iw0 = owlo * g.stride - g.pad + kw * g.dil;
                        double* srow = S + (static_cast<std::size_t>(cs) * g.sh + ih) * g.sw + iw0;
                        const double* grow = G + (static_cast<std::size_t>(cg) * g.gh + oh) * g.gw + owlo;
                        if (g.stride == 1) {
                            for (int i = 0; i < n; ++i) srow[i] += wv * grow[i];
                        } else {
                            for (int i = 0; i < n; ++i) srow[i * g.stride] += wv * grow[i];
                        }
                    }
                }
            }
        }
    }
}

/// W[cg,cs,kh,kw] += sum_{oh,ow} G * S  (weight gradients)
inline void conv_wgrad(double* W, const double* S, const double* G, const ConvGeom& g) {
    for (int cg = 0; cg < g.cg; ++cg) {
        for (int cs = 0; cs < g.cs; ++cs) {
            double* wblk = W + (static_cast<std::size_t>(cg) * g.cs + cs) * g.k * g.k;
            for (int kh = 0; kh < g.k; ++kh) {
                int ohlo, ohhi;
                tap_range(kh, g, g.sh, g.gh, ohlo, ohhi);
                if (ohhi < ohlo) continue;
                for (int kw = 0; kw < g.k; ++kw) {
                    int owlo, owhi;
                    tap_range(kw, g, g.sw, g.gw, owlo, owhi);
                    if (owhi < owlo) continue;
                    const int n = owhi - owlo + 1;
                    double acc = 0.0;
                    for (int oh = ohlo; oh <= ohhi; ++oh) {
                        const int ih = oh * g.stride - g.pad + kh * g.dil;
                        const int iw0 = owlo * g.stride - g.pad + kw * g.dil;
                        const double* srow = S + (static_cast<std::size_t>(cs) * g.sh + ih) * g.sw + iw0;
                        const double* grow = G + (static_cast<std::size_t>(cg) * g.gh + oh) * g.gw + owlo;
                        if (g.stride == 1) {
                            for (int i = 0; i < n; ++i) acc += grow[i] * srow[i];
                        } else {
                            for (int i = 0; i < n; ++i) acc += grow[i] * srow[i * g.stride];
                        }
                    }
                    wblk[kh * g.k + kw] += acc;
                }
            }
        }
    }
}

} // namespace corrpm::detail
