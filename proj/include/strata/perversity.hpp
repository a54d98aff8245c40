#ifndef STRATA_PERVERSITY_HPP
#define STRATA_PERVERSITY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strata {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoCover : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integer function on codimensions 2..n with p(2) = 0 and unit-step growth.
class Perversity {
public:
    // values[i] is the value at codimension k = i + 2
    Perversity(int n, std::vector<int> values);

    static Perversity zero(int n);
    static Perversity top(int n);

    int n() const { return n_; }
    int operator()(int k) const;          // value at codimension k, 2 <= k <= n
    const std::vector<int>& values() const { return values_; }

    bool operator==(const Perversity& o) const { return n_ == o.n_ && values_ == o.values_; }
    bool operator!=(const Perversity& o) const { return !(*this == o); }
    bool operator<(const Perversity& o) const;  // lexicographic, for ordered containers

    std::string to_string() const;        // "0,0,1,1,2" over k = 2..n
    static Perversity parse(int n, const std::string& text);

private:
    int n_;
    std::vector<int> values_;
};

using PerversityCollection = std::vector<Perversity>;

// pointwise partial order
bool leq(const Perversity& p, const Perversity& q);

// sum_i p_i(j) <= r(j) for all j
bool collection_leq(const PerversityCollection& P, const Perversity& r);

// The unique minimal valid perversity dominating p + q, by backward recursion
// from codimension n.  Throws NoCover when no valid perversity dominates the
// sum (clamping would corrupt downstream target-perversity logic).
Perversity minimal_cover(const Perversity& p, const Perversity& q);

// All valid n-perversities in lexicographic order; 2^(n-2) of them.
std::vector<Perversity> enumerate_perversities(int n, int bound = 12);

}  // namespace strata

#endif
