#ifndef STARFACTOR_UTIL_HPP
#define STARFACTOR_UTIL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace starfactor {

// Error taxonomy shared with the C API / CLI exit codes.
enum class ErrorCode : int {
    parse = 1,     // malformed input
    bound = 2,     // configured size bound exceeded
    internal = 3,  // internal invariant violated (a bug, or a theorem failed)
    argument = 4,  // bad argument to an operation
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_parse(const std::string& msg, long offset = -1) {
    if (offset >= 0)
        throw Error(ErrorCode::parse, msg + " (byte offset " + std::to_string(offset) + ")");
    throw Error(ErrorCode::parse, msg);
}
[[noreturn]] inline void throw_bound(const std::string& msg) { throw Error(ErrorCode::bound, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw Error(ErrorCode::internal, msg); }
[[noreturn]] inline void throw_arg(const std::string& msg) { throw Error(ErrorCode::argument, msg); }

inline void check_internal(bool cond, const char* msg) {
    if (!cond) throw_internal(msg);
}

// Exact rational; every quantity in this library is exact, never floating point.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static Rat half(long long twice) { return Rat(twice, 2); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }
    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Dense bitset over vertices 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : n_(n), bits_((n + 63) / 64, 0) {}
    VertexSet(int n, std::initializer_list<int> xs) : VertexSet(n) {
        for (int x : xs) set(x);
    }

    int universe() const { return n_; }

    void set(int v) {
        range_check(v);
        bits_[v >> 6] |= 1ull << (v & 63);
    }
    void reset(int v) {
        range_check(v);
        bits_[v >> 6] &= ~(1ull << (v & 63));
    }
    bool test(int v) const {
        return v >= 0 && v < n_ && (bits_[v >> 6] >> (v & 63)) & 1;
    }

    int count() const {
        int c = 0;
        for (auto w : bits_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = 0; v < n_; ++v)
            if (test(v)) out.push_back(v);
        return out;
    }

    VertexSet complement() const {
        VertexSet s(n_);
        for (int v = 0; v < n_; ++v)
            if (!test(v)) s.set(v);
        return s;
    }

    friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
        VertexSet s(a.n_);
        for (size_t i = 0; i < s.bits_.size(); ++i) s.bits_[i] = a.bits_[i] | b.bits_[i];
        return s;
    }
    friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
        VertexSet s(a.n_);
        for (size_t i = 0; i < s.bits_.size(); ++i) s.bits_[i] = a.bits_[i] & b.bits_[i];
        return s;
    }
    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

    bool intersects(const VertexSet& other) const {
        for (size_t i = 0; i < bits_.size() && i < other.bits_.size(); ++i)
            if (bits_[i] & other.bits_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& other) const {
        for (size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~(i < other.bits_.size() ? other.bits_[i] : 0)) return false;
        return true;
    }

    static VertexSet from_mask(int n, uint64_t mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.set(v);
        return s;
    }

private:
    void range_check(int v) const {
        if (v < 0 || v >= n_) throw_arg("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<uint64_t> bits_;
};

struct Edge {
    int u = -1;
    int v = -1;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; }
};

}  // namespace starfactor

#endif
