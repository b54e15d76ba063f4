#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corrpm/detail/conv_kernels.hpp"
#include "corrpm/op_counter.hpp"
#include "corrpm/tensor.hpp"

namespace corrpm {

/// Handle to one node on a Tape.
struct Var {
    int idx = -1;
    bool valid() const { return idx >= 0; }
};

/// Dynamically recorded operation tape. Each forward op appends a node whose
/// backward closure accumulates into the parents' gradient buffers; reverse
/// node order is a valid reverse-topological order by construction.
class Tape {
public:
    using BackwardFn = std::function<void(Tape&, const Tensor& grad_out)>;

    explicit Tape(OpCounter* counter = nullptr) : counter_(counter) {}

    void set_counter(OpCounter* c) { counter_ = c; }
    std::size_t size() const { return nodes_.size(); }

    Var leaf(Tensor value, bool requires_grad = true) {
        return push(std::move(value), requires_grad, nullptr);
    }

    const Tensor& value(Var v) const { return nodes_[check(v)].value; }
    bool requires_grad(Var v) const { return nodes_[check(v)].requires_grad; }

    /// Gradient buffer for v after backward(); zeros if nothing flowed.
    const Tensor& grad(Var v) {
        const int i = check(v);
        return grad_buffer(i);
    }

    bool grad_nonempty(Var v) const {
        const int i = check(v);
        return i < static_cast<int>(grads_.size()) && !grads_[i].empty();
    }

    /// Builds a node from a precomputed value; fn accumulates parent grads.
    Var make_node(Tensor value, const std::vector<Var>& parents, BackwardFn fn) {
        bool req = false;
        for (Var p : parents) req = req || nodes_[check(p)].requires_grad;
        return push(std::move(value), req, req ? std::move(fn) : nullptr);
    }

    Tensor& grad_buffer(int idx) {
        if (grads_.size() < nodes_.size()) grads_.resize(nodes_.size());
        if (grads_[idx].empty()) grads_[idx] = Tensor::zeros(nodes_[idx].value.shape);
        return grads_[idx];
    }

    void backward(Var loss) {
        if (nodes_.empty()) throw std::logic_error("backward: no recorded computation on this tape");
        const int li = check(loss);
        if (nodes_[li].value.numel() != 1)
            throw std::invalid_argument("backward: loss must be scalar, got shape " +
                                        shape_str(nodes_[li].value.shape));
        grads_.assign(nodes_.size(), Tensor{});
        grad_buffer(li).data[0] = 1.0;
        for (int i = li; i >= 0; --i) {
            if (grads_[i].empty()) continue;
            if (!nodes_[i].requires_grad || !nodes_[i].backward) continue;
            nodes_[i].backward(*this, grads_[i]);
        }
    }

    // --- operations --------------------------------------------------------

    Var conv2d(Var input, Var weight, Var bias, int stride, int pad, int dilation = 1,
               std::string_view tag = "conv2d") {
        const Tensor& x = value(input);
        const Tensor& w = value(weight);
        const Tensor& b = value(bias);
        if (x.rank() != 3 || w.rank() != 4 || b.rank() != 1)
            throw std::invalid_argument("conv2d: expected ranks 3/4/1, got " + shape_str(x.shape) +
                                        "/" + shape_str(w.shape) + "/" + shape_str(b.shape));
        if (w.shape[1] != x.shape[0])
            throw std::invalid_argument("conv2d: input channels " + shape_str(x.shape) +
                                        " do not match weight " + shape_str(w.shape));
        if (w.shape[2] != w.shape[3])
            throw std::invalid_argument("conv2d: non-square kernel " + shape_str(w.shape));
        if (b.shape[0] != w.shape[0])
            throw std::invalid_argument("conv2d: bias " + shape_str(b.shape) +
                                        " does not match output channels of " + shape_str(w.shape));
        if (stride < 1 || dilation < 1 || pad < 0)
            throw std::invalid_argument("conv2d: need stride>=1, dilation>=1, pad>=0");

        detail::ConvGeom g;
        g.cg = static_cast<int>(w.shape[0]);
        g.cs = static_cast<int>(x.shape[0]);
        g.sh = static_cast<int>(x.shape[1]);
        g.sw = static_cast<int>(x.shape[2]);
        g.k = static_cast<int>(w.shape[2]);
        g.stride = stride;
        g.pad = pad;
        g.dil = dilation;
        g.gh = detail::conv_out_extent(g.sh, g.k, stride, pad, dilation);
        g.gw = detail::conv_out_extent(g.sw, g.k, stride, pad, dilation);
        if (g.gh < 1 || g.gw < 1)
            throw std::invalid_argument("conv2d: kernel does not fit padded input, output would be " +
                                        std::to_string(g.gh) + "x" + std::to_string(g.gw));

        Tensor out({w.shape[0], static_cast<std::size_t>(g.gh), static_cast<std::size_t>(g.gw)});
        const std::size_t plane = out.shape[1] * out.shape[2];
        for (std::size_t co = 0; co < out.shape[0]; ++co)
            std::fill_n(out.data.data() + co * plane, plane, b.data[co]);
        detail::conv_gather(out.data.data(), x.data.data(), w.data.data(), g);

        if (counter_)
            counter_->add(tag, static_cast<std::uint64_t>(g.cg) * g.cs * g.k * g.k * g.gh * g.gw);

        const bool nx = requires_grad(input), nw = requires_grad(weight), nb = requires_grad(bias);
        return make_node(std::move(out), {input, weight, bias},
                         [input, weight, bias, g, nx, nw, nb](Tape& t, const Tensor& go) {
                             const Tensor& xv = t.value(input);
                             const Tensor& wv = t.value(weight);
                             if (nx)
                                 detail::conv_scatter(t.grad_buffer(input.idx).data.data(),
                                                      go.data.data(), wv.data.data(), g);
                             if (nw)
                                 detail::conv_wgrad(t.grad_buffer(weight.idx).data.data(),
                                                    xv.data.data(), go.data.data(), g);
                             if (nb) {
                                 Tensor& gb = t.grad_buffer(bias.idx);
                                 const std::size_t plane = static_cast<std::size_t>(g.gh) * g.gw;
                                 for (int co = 0; co < g.cg; ++co) {
                                     double acc = 0.0;
                                     const double* row = go.data.data() + co * plane;
                                     for (std::size_t i = 0; i < plane; ++i) acc += row[i];
                                     gb.data[co] += acc;
                                 }
                             }
                         });
    }

    /// Adjoint of conv2d with the same geometry; weight is [C_in,C_out,k,k].
    Var transposed_conv2d(Var input, Var weight, Var bias, int stride, int pad, int dilation = 1,
                          std::string_view tag = "transposed_conv2d") {
        const Tensor& x = value(input);
        const Tensor& w = value(weight);
        const Tensor& b = value(bias);
        if (x.rank() != 3 || w.rank() != 4 || b.rank() != 1)
            throw std::invalid_argument("transposed_conv2d: expected ranks 3/4/1");
        if (w.shape[0] != x.shape[0])
            throw std::invalid_argument("transposed_conv2d: input channels " + shape_str(x.shape) +
                                        " do not match weight " + shape_str(w.shape));
        if (w.shape[2] != w.shape[3])
            throw std::invalid_argument("transposed_conv2d: non-square kernel " + shape_str(w.shape));
        if (b.shape[0] != w.shape[1])
            throw std::invalid_argument("transposed_conv2d: bias does not match output channels");
        if (stride < 1 || dilation < 1 || pad < 0)
            throw std::invalid_argument("transposed_conv2d: need stride>=1, dilation>=1, pad>=0");

        detail::ConvGeom g;
        g.cg = static_cast<int>(x.shape[0]); // tconv input lives on the gather side
        g.cs = static_cast<int>(w.shape[1]);
        g.gh = static_cast<int>(x.shape[1]);
        g.gw = static_cast<int>(x.shape[2]);
        g.k = static_cast<int>(w.shape[2]);
        g.stride = stride;
        g.pad = pad;
        g.dil = dilation;
        g.sh = (g.gh - 1) * stride - 2 * pad + dilation * (g.k - 1) + 1;
        g.sw = (g.gw - 1) * stride - 2 * pad + dilation * (g.k - 1) + 1;
        if (g.sh < 1 || g.sw < 1)
            throw std::invalid_argument("transposed_conv2d: geometry gives non-positive output extent " +
                                        std::to_string(g.sh) + "x" + std::to_string(g.sw));

        Tensor out({w.shape[1], static_cast<std::size_t>(g.sh), static_cast<std::size_t>(g.sw)});
        detail::conv_scatter(out.data.data(), x.data.data(), w.data.data(), g);
        const std::size_t plane = out.shape[1] * out.shape[2];
        for (std::size_t co = 0; co < out.shape[0]; ++co) {
            double* row = out.data.data() + co * plane;
            const double bv = b.data[co];
            for (std::size_t i = 0; i < plane; ++i) row[i] += bv;
        }

        if (counter_)
            counter_->add(tag, static_cast<std::uint64_t>(g.cg) * g.cs * g.k * g.k * g.gh * g.gw);

        const bool nx = requires_grad(input), nw = requires_grad(weight), nb = requires_grad(bias);
        return make_node(std::move(out), {input, weight, bias},
                         [input, weight, bias, g, nx, nw, nb](Tape& t, const Tensor& go) {
                             const Tensor& xv = t.value(input);
                             const Tensor& wv = t.value(weight);
                             if (nx)
                                 detail::conv_gather(t.grad_buffer(input.idx).data.data(),
                                                     go.data.data(), wv.data.data(), g);
                             if (nw)
                                 detail::conv_wgrad(t.grad_buffer(weight.idx).data.data(),
                                                    go.data.data(), xv.data.data(), g);
                             if (nb) {
                                 Tensor& gb = t.grad_buffer(bias.idx);
                                 const std::size_t plane = static_cast<std::size_t>(g.sh) * g.sw;
                                 for (int co = 0; co < g.cs; ++co) {
                                     double acc = 0.0;
                                     const double* row = go.data.data() + co * plane;
                                     for (std::size_t i = 0; i < plane; ++i) acc += row[i];
                                     gb.data[co] += acc;
                                 }
                             }
                         });
    }

    /// Align-corners bilinear resampling: endpoints map to endpoints, every
    /// output is a convex combination of the four nearest samples.
    Var bilinear_upsample(Var input, std::size_t out_h, std::size_t out_w) {
        const Tensor& x = value(input);
        if (x.rank() != 3)
            throw std::invalid_argument("bilinear_upsample: expected rank 3, got " + shape_str(x.shape));
        if (out_h < 1 || out_w < 1) throw std::invalid_argument("bilinear_upsample: target must be >= 1");

        const std::size_t C = x.shape[0], H = x.shape[1], W = x.shape[2];
        struct Tap {
            std::size_t i0, i1;
            double f;
        };
        auto make_taps = [](std::size_t in, std::size_t out) {
            std::vector<Tap> taps(out);
            const double scale = out > 1 ? static_cast<double>(in - 1) / static_cast<double>(out - 1) : 0.0;
            for (std::size_t o = 0; o < out; ++o) {
                const double src = static_cast<double>(o) * scale;
                std::size_t i0 = static_cast<std::size_t>(src);
                if (i0 >= in - 1) i0 = in - 1;
                const std::size_t i1 = std::min(i0 + 1, in - 1);
                taps[o] = {i0, i1, src - static_cast<double>(i0)};
            }
            return taps;
        };
        const auto ty = make_taps(H, out_h);
        const auto tx = make_taps(W, out_w);

        Tensor out({C, out_h, out_w});
        for (std::size_t c = 0; c < C; ++c) {
            const double* plane = x.data.data() + c * H * W;
            double* oplane = out.data.data() + c * out_h * out_w;
            for (std::size_t oy = 0; oy < out_h; ++oy) {
                const Tap& yt = ty[oy];
                const double* r0 = plane + yt.i0 * W;
                const double* r1 = plane + yt.i1 * W;
                double* orow = oplane + oy * out_w;
                for (std::size_t ox = 0; ox < out_w; ++ox) {
                    const Tap& xt = tx[ox];
                    const double top = r0[xt.i0] * (1.0 - xt.f) + r0[xt.i1] * xt.f;
                    const double bot = r1[xt.i0] * (1.0 - xt.f) + r1[xt.i1] * xt.f;
                    orow[ox] = top * (1.0 - yt.f) + bot * yt.f;
                }
            }
        }

        if (!requires_grad(input)) return make_node(std::move(out), {input}, nullptr);
        return make_node(std::move(out), {input},
                         [input, ty, tx, C, H, W, out_h, out_w](Tape& t, const Tensor& go) {
                             Tensor& gi = t.grad_buffer(input.idx);
                             for (std::size_t c = 0; c < C; ++c) {
                                 double* gplane = gi.data.data() + c * H * W;
                                 const double* oplane = go.data.data() + c * out_h * out_w;
                                 for (std::size_t oy = 0; oy < out_h; ++oy) {
                                     const Tap& yt = ty[oy];
                                     for (std::size_t ox = 0; ox < out_w; ++ox) {
                                         const Tap& xt = tx[ox];
                                         const double g = oplane[oy * out_w + ox];
                                         gplane[yt.i0 * W + xt.i0] += g * (1.0 - yt.f) * (1.0 - xt.f);
                                         gplane[yt.i0 * W + xt.i1] += g * (1.0 - yt.f) * xt.f;
                                         gplane[yt.i1 * W + xt.i0] += g * yt.f * (1.0 - xt.f);
                                         gplane[yt.i1 * W + xt.i1] += g * yt.f * xt.f;
                                     }
                                 }
                             }
                         });
    }

    Var concat_channels(const std::vector<Var>& inputs) {
        if (inputs.empty()) throw std::invalid_argument("concat_channels: no inputs");
        const Tensor& first = value(inputs[0]);
        if (first.rank() != 3) throw std::invalid_argument("concat_channels: expected rank-3 inputs");
        const std::size_t H = first.shape[1], W = first.shape[2];
        std::size_t total_c = 0;
        for (Var v : inputs) {
            const Tensor& x = value(v);
            if (x.rank() != 3 || x.shape[1] != H || x.shape[2] != W)
                throw std::invalid_argument("concat_channels: spatial mismatch, " + shape_str(x.shape) +
                                            " vs " + shape_str(first.shape));
            total_c += x.shape[0];
        }
        Tensor out({total_c, H, W});
        std::size_t off = 0;
        for (Var v : inputs) {
            const Tensor& x = value(v);
            std::copy(x.data.begin(), x.data.end(), out.data.begin() + off);
            off += x.numel();
        }
        std::vector<bool> need(inputs.size());
        bool any = false;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            need[i] = requires_grad(inputs[i]);
            any = any || need[i];
        }
        if (!any) return make_node(std::move(out), inputs, nullptr);
        return make_node(std::move(out), inputs, [inputs, need](Tape& t, const Tensor& go) {
            std::size_t off = 0;
            for (std::size_t i = 0; i < inputs.size(); ++i) {
                const std::size_t n = t.value(inputs[i]).numel();
                if (need[i]) {
                    Tensor& gi = t.grad_buffer(inputs[i].idx);
                    const double* src = go.data.data() + off;
                    for (std::size_t j = 0; j < n; ++j) gi.data[j] += src[j];
                }
                off += n;
            }
        });
    }

    Var matmul(Var a, Var b, std::string_view tag = "matmul") {
        const Tensor& A = value(a);
        const Tensor& B = value(b);
        if (A.rank() != 2 || B.rank() != 2)
            throw std::invalid_argument("matmul: expected rank-2 operands");
        if (A.shape[1] != B.shape[0])
            throw std::invalid_argument("matmul: inner dimension mismatch " + shape_str(A.shape) +
                                        " x " + shape_str(B.shape));
        const std::size_t N = A.shape[0], K = A.shape[1], M = B.shape[1];
        Tensor out({N, M});
        for (std::size_t i = 0; i < N; ++i) {
            double* crow = out.data.data() + i * M;
            const double* arow = A.data.data() + i * K;
            for (std::size_t k = 0; k < K; ++k) {
                const double av = arow[k];
                const double* brow = B.data.data() + k * M;
                for (std::size_t j = 0; j < M; ++j) crow[j] += av * brow[j];
            }
        }
        if (counter_) counter_->add(tag, static_cast<std::uint64_t>(N) * K * M);

        const bool na = requires_grad(a), nb = requires_grad(b);
        return make_node(std::move(out), {a, b}, [a, b, N, K, M, na, nb](Tape& t, const Tensor& go) {
            const Tensor& A = t.value(a);
            const Tensor& B = t.value(b);
            if (na) {
                Tensor& ga = t.grad_buffer(a.idx);
                for (std::size_t i = 0; i < N; ++i) {
                    const double* grow = go.data.data() + i * M;
                    double* garow = ga.data.data() + i * K;
                    for (std::size_t k = 0; k < K; ++k) {
                        const double* brow = B.data.data() + k * M;
                        double acc = 0.0;
                        for (std::size_t j = 0; j < M; ++j) acc += grow[j] * brow[j];
                        garow[k] += acc;
                    }
                }
            }
            if (nb) {
                Tensor& gb = t.grad_buffer(b.idx);
                for (std::size_t i = 0; i < N; ++i) {
                    const double* arow = A.data.data() + i * K;
                    const double* grow = go.data.data() + i * M;
                    for (std::size_t k = 0; k < K; ++k) {
                        const double av = arow[k];
                        double* gbrow = gb.data.data() + k * M;
                        for (std::size_t j = 0; j < M; ++j) gbrow[j] += av * grow[j];
                    }
                }
            }
        });
    }

    /// Row-wise softmax, stabilized by subtracting the row maximum.
    Var softmax_rows(Var input) {
        const Tensor& x = value(input);
        if (x.rank() != 2) throw std::invalid_argument("softmax_rows: expected rank 2");
        const std::size_t N = x.shape[0], M = x.shape[1];
        Tensor out({N, M});
        for (std::size_t i = 0; i < N; ++i) {
            const double* row = x.data.data() + i * M;
            double* orow = out.data.data() + i * M;
            double mx = row[0];
            for (std::size_t j = 1; j < M; ++j) mx = std::max(mx, row[j]);
            double sum = 0.0;
            for (std::size_t j = 0; j < M; ++j) {
                orow[j] = std::exp(row[j] - mx);
                sum += orow[j];
            }
            const double inv = 1.0 / sum;
            for (std::size_t j = 0; j < M; ++j) orow[j] *= inv;
        }
        if (!requires_grad(input)) return make_node(std::move(out), {input}, nullptr);
        const int self = static_cast<int>(nodes_.size());
        return make_node(std::move(out), {input}, [input, self, N, M](Tape& t, const Tensor& go) {
            const Tensor& y = t.value(Var{self});
            Tensor& gi = t.grad_buffer(input.idx);
            for (std::size_t i = 0; i < N; ++i) {
                const double* yrow = y.data.data() + i * M;
                const double* grow = go.data.data() + i * M;
                double* girow = gi.data.data() + i * M;
                double dot = 0.0;
                for (std::size_t j = 0; j < M; ++j) dot += grow[j] * yrow[j];
                for (std::size_t j = 0; j < M; ++j) girow[j] += yrow[j] * (grow[j] - dot);
            }
        });
    }

    Var relu(Var input) {
        const Tensor& x = value(input);
        Tensor out(x.shape);
        for (std::size_t i = 0; i < x.numel(); ++i) out.data[i] = x.data[i] > 0.0 ? x.data[i] : 0.0;
        if (!requires_grad(input)) return make_node(std::move(out), {input}, nullptr);
        return make_node(std::move(out), {input}, [input](Tape& t, const Tensor& go) {
            const Tensor& x = t.value(input);
            Tensor& gi = t.grad_buffer(input.idx);
            for (std::size_t i = 0; i < x.numel(); ++i)
                if (x.data[i] > 0.0) gi.data[i] += go.data[i];
        });
    }

    Var reshape(Var input, Shape target) {
        const Tensor& x = value(input);
        if (shape_numel(target) != x.numel())
            throw std::invalid_argument("reshape: cannot view " + shape_str(x.shape) + " as " +
                                        shape_str(target));
        Tensor out(std::move(target), x.data);
        if (!requires_grad(input)) return make_node(std::move(out), {input}, nullptr);
        return make_node(std::move(out), {input}, [input](Tape& t, const Tensor& go) {
            Tensor& gi = t.grad_buffer(input.idx);
            for (std::size_t i = 0; i < go.numel(); ++i) gi.data[i] += go.data[i];
        });
    }

    Var transpose(Var input) {
        const Tensor& x = value(input);
        if (x.rank() != 2) throw std::invalid_argument("transpose: expected rank 2");
        const std::size_t N = x.shape[0], M = x.shape[1];
        Tensor out({M, N});
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < M; ++j) out.data[j * N + i] = x.data[i * M + j];
        if (!requires_grad(input)) return make_node(std::move(out), {input}, nullptr);
        return make_node(std::move(out), {input}, [input, N, M](Tape& t, const Tensor& go) {
            Tensor& gi = t.grad_buffer(input.idx);
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < M; ++j) gi.data[i * M + j] += go.data[j * N + i];
        });
    }

    Var add(Var a, Var b) {
        const Tensor& A = value(a);
        const Tensor& B = value(b);
        if (!A.same_shape(B))
            throw std::invalid_argument("add: shape mismatch " + shape_str(A.shape) + " vs " +
                                        shape_str(B.shape));
        Tensor out(A.shape);
        for (std::size_t i = 0; i < A.numel(); ++i) out.data[i] = A.data[i] + B.data[i];
        const bool na = requires_grad(a), nb = requires_grad(b);
        if (!na && !nb) return make_node(std::move(out), {a, b}, nullptr);
        return make_node(std::move(out), {a, b}, [a, b, na, nb](Tape& t, const Tensor& go) {
            if (na) {
                Tensor& ga = t.grad_buffer(a.idx);
                for (std::size_t i = 0; i < go.numel(); ++i) ga.data[i] += go.data[i];
            }
            if (nb) {
                Tensor& gb = t.grad_buffer(b.idx);
                for (std::size_t i = 0; i < go.numel(); ++i) gb.data[i] += go.data[i];
            }
        });
    }

    Var scale(Var input, double s) {
        const Tensor& x = value(input);
        Tensor out(x.shape);
        for (std::size_t i = 0; i < x.numel(); ++i) out.data[i] = x.data[i] * s;
        if (!requires_grad(input)) return make_node(std::move(out), {input}, nullptr);
        return make_node(std::move(out), {input}, [input, s](Tape& t, const Tensor& go) {
            Tensor& gi = t.grad_buffer(input.idx);
            for (std::size_t i = 0; i < go.numel(); ++i) gi.data[i] += s * go.data[i];
        });
    }

    Var sum(Var input) {
        const Tensor& x = value(input);
        double acc = 0.0;
        for (double v : x.data) acc += v;
        if (!requires_grad(input)) return make_node(Tensor::scalar(acc), {input}, nullptr);
        return make_node(Tensor::scalar(acc), {input}, [input](Tape& t, const Tensor& go) {
            Tensor& gi = t.grad_buffer(input.idx);
            for (double& v : gi.data) v += go.data[0];
        });
    }

    /// Scalar projection against a fixed coefficient tensor.
    Var dot(Var input, Tensor coeffs) {
        const Tensor& x = value(input);
        if (!x.same_shape(coeffs))
            throw std::invalid_argument("dot: shape mismatch " + shape_str(x.shape) + " vs " +
                                        shape_str(coeffs.shape));
        double acc = 0.0;
        for (std::size_t i = 0; i < x.numel(); ++i) acc += x.data[i] * coeffs.data[i];
        if (!requires_grad(input)) return make_node(Tensor::scalar(acc), {input}, nullptr);
        return make_node(Tensor::scalar(acc), {input},
                         [input, c = std::move(coeffs)](Tape& t, const Tensor& go) {
                             Tensor& gi = t.grad_buffer(input.idx);
                             for (std::size_t i = 0; i < gi.numel(); ++i) gi.data[i] += go.data[0] * c.data[i];
                         });
    }

private:
    struct Node {
        Tensor value;
        BackwardFn backward;
        bool requires_grad = false;
    };

    std::vector<Node> nodes_;
    std::vector<Tensor> grads_;
    OpCounter* counter_ = nullptr;

    int check(Var v) const {
        if (!v.valid() || v.idx >= static_cast<int>(nodes_.size()))
            throw std::logic_error("Tape: invalid Var handle");
        return v.idx;
    }

    Var push(Tensor value, bool requires_grad, BackwardFn fn) {
        nodes_.push_back(Node{std::move(value), std::move(fn), requires_grad});
        return Var{static_cast<int>(nodes_.size()) - 1};
    }
};

} // namespace corrpm
