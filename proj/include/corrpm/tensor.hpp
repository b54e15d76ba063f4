#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace corrpm {

using Shape = std::vector<std::size_t>;

inline std::string shape_str(const Shape& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += ")";
    return out;
}

inline std::size_t shape_numel(const Shape& s) {
    std::size_t n = 1;
    for (std::size_t e : s) n *= e;
    return n;
}

/// Dense row-major tensor of doubles. The one value type shared by images,
/// feature maps, heatmaps and gradients.
struct Tensor {
    Shape shape;
    std::vector<double> data;

    Tensor() = default;

    explicit Tensor(Shape s) : shape(std::move(s)), data(checked_numel(shape), 0.0) {}

    Tensor(Shape s, std::vector<double> values) : shape(std::move(s)), data(std::move(values)) {
        if (data.size() != shape_numel(shape))
            throw std::invalid_argument("Tensor: data length " + std::to_string(data.size()) +
                                        " does not match shape " + shape_str(shape));
    }

    static Tensor zeros(Shape s) { return Tensor(std::move(s)); }

    static Tensor full(Shape s, double v) {
        Tensor t(std::move(s));
        std::fill(t.data.begin(), t.data.end(), v);
        return t;
    }

    static Tensor ones(Shape s) { return full(std::move(s), 1.0); }

    static Tensor scalar(double v) { return Tensor({1}, {v}); }

    std::size_t numel() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }
    std::size_t extent(std::size_t axis) const { return shape.at(axis); }
    bool empty() const { return data.empty(); }

    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    double& operator()(std::size_t i, std::size_t j) { return data[i * shape[1] + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * shape[1] + j]; }

    double& operator()(std::size_t c, std::size_t h, std::size_t w) {
        return data[(c * shape[1] + h) * shape[2] + w];
    }
    double operator()(std::size_t c, std::size_t h, std::size_t w) const {
        return data[(c * shape[1] + h) * shape[2] + w];
    }

    double& at4(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        return data[((a * shape[1] + b) * shape[2] + c) * shape[3] + d];
    }
    double at4(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
        return data[((a * shape[1] + b) * shape[2] + c) * shape[3] + d];
    }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }

    bool same_shape(const Tensor& other) const { return shape == other.shape; }

private:
    static std::size_t checked_numel(const Shape& s) {
        if (s.empty()) throw std::invalid_argument("Tensor: rank-0 shape not supported");
        for (std::size_t e : s)
            if (e == 0) throw std::invalid_argument("Tensor: zero extent in shape " + shape_str(s));
        return shape_numel(s);
    }
};

inline void fill_uniform(Tensor& t, std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    for (double& v : t.data) v = dist(rng);
}

inline Tensor random_uniform(Shape s, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    Tensor t(std::move(s));
    fill_uniform(t, rng, lo, hi);
    return t;
}

// ---------------------------------------------------------------------------
// CPMT on-disk container: "CPMT" magic, version byte, rank byte,
// little-endian u64 extents, then little-endian IEEE-754 doubles, row-major.
// ---------------------------------------------------------------------------

namespace detail {

inline void put_u64le(std::ostream& os, std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xFF);
    os.write(reinterpret_cast<const char*>(b), 8);
}

inline std::uint64_t get_u64le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
}

[[noreturn]] inline void cpmt_fail(const std::string& what, const std::string& context,
                                   std::streamoff offset) {
    std::ostringstream oss;
    oss << "CPMT: " << what;
    if (!context.empty()) oss << " in " << context;
    oss << " at byte offset " << offset;
    throw std::runtime_error(oss.str());
}

} // namespace detail

inline void write_cpmt(std::ostream& os, const Tensor& t) {
    os.write("CPMT", 4);
    const unsigned char version = 1;
    const unsigned char rank = static_cast<unsigned char>(t.rank());
    os.put(static_cast<char>(version));
    os.put(static_cast<char>(rank));
    for (std::size_t e : t.shape) detail::put_u64le(os, e);
    for (double v : t.data) detail::put_u64le(os, std::bit_cast<std::uint64_t>(v));
}

inline Tensor read_cpmt(std::istream& is, const std::string& context = "") {
    const std::streamoff start = is.tellg();
    char magic[4] = {};
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "CPMT", 4) != 0)
        detail::cpmt_fail("bad magic", context, start);
    const int version = is.get();
    if (version != 1) detail::cpmt_fail("unsupported version " + std::to_string(version), context, start + 4);
    const int rank = is.get();
    if (rank <= 0 || rank > 8) detail::cpmt_fail("implausible rank " + std::to_string(rank), context, start + 5);
    Shape shape(static_cast<std::size_t>(rank));
    for (auto& e : shape) {
        e = static_cast<std::size_t>(detail::get_u64le(is));
        if (!is || e == 0 || e > (1ull << 32))
            detail::cpmt_fail("bad extent", context, is.tellg());
    }
    Tensor t(shape);
    for (double& v : t.data) {
        const std::uint64_t bits = detail::get_u64le(is);
        if (!is) detail::cpmt_fail("truncated payload", context, is.tellg());
        v = std::bit_cast<double>(bits);
    }
    return t;
}

inline void save_cpmt(const std::filesystem::path& path, const Tensor& t) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for write: " + path.string());
    write_cpmt(os, t);
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

inline Tensor load_cpmt(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open: " + path.string());
    return read_cpmt(is, path.string());
}

} // namespace corrpm
