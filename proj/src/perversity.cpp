#include "strata/perversity.hpp"

#include <sstream>

namespace strata {

Perversity::Perversity(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
    if (n_ < 2) throw std::invalid_argument("Perversity: n must be >= 2");
    if (static_cast<int>(values_.size()) != n_ - 1)
        throw std::invalid_argument("Perversity: expected values for k = 2..n");
    if (values_[0] != 0) throw std::invalid_argument("Perversity: p(2) must be 0");
    for (std::size_t i = 0; i + 1 < values_.size(); ++i)
        if (values_[i + 1] < values_[i] || values_[i + 1] > values_[i] + 1)
            throw std::invalid_argument("Perversity: growth must be 0 or 1 per step");
}

Perversity Perversity::zero(int n) {
    if (n < 2) throw std::invalid_argument("Perversity: n must be >= 2");
    return Perversity(n, std::vector<int>(n - 1, 0));
}

Perversity Perversity::top(int n) {
    if (n < 2) throw std::invalid_argument("Perversity: n must be >= 2");
    std::vector<int> v(n - 1);
    for (int k = 2; k <= n; ++k) v[k - 2] = k - 2;
    return Perversity(n, std::move(v));
}

int Perversity::operator()(int k) const {
    if (k < 2 || k > n_) throw std::out_of_range("Perversity: codimension out of range");
    return values_[k - 2];
}

bool Perversity::operator<(const Perversity& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return values_ < o.values_;
}

std::string Perversity::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    return os.str();
}

Perversity Perversity::parse(int n, const std::string& text) {
    std::vector<int> v;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ',')) {
        std::size_t pos = 0;
        int x = std::stoi(part, &pos);
        if (pos != part.size()) throw std::invalid_argument("Perversity: bad value '" + part + "'");
        v.push_back(x);
    }
    if (n == 0) n = static_cast<int>(v.size()) + 1;  // infer from value count
    return Perversity(n, std::move(v));
}

bool leq(const Perversity& p, const Perversity& q) {
    if (p.n() != q.n()) throw DimensionMismatch("leq: perversities with different n");
    for (int k = 2; k <= p.n(); ++k)
        if (p(k) > q(k)) return false;
    return true;
}

bool collection_leq(const PerversityCollection& P, const Perversity& r) {
    if (P.empty()) throw std::invalid_argument("collection_leq: empty collection");
    for (const auto& p : P)
        if (p.n() != r.n()) throw DimensionMismatch("collection_leq: perversities with different n");
    for (int k = 2; k <= r.n(); ++k) {
        long long sum = 0;
        for (const auto& p : P) sum += p(k);
        if (sum > r(k)) return false;
    }
    return true;
}

Perversity minimal_cover(const Perversity& p, const Perversity& q) {
    if (p.n() != q.n()) throw DimensionMismatch("minimal_cover: perversities with different n");
    const int n = p.n();
    std::vector<int> s(n - 1);
    s[n - 2] = p(n) + q(n);
    for (int k = n - 1; k >= 2; --k)
        s[k - 2] = (p(k) + q(k) < s[k - 1]) ? s[k - 1] - 1 : s[k - 1];
    if (s[0] != 0)
        throw NoCover("minimal_cover: no valid perversity dominates the sum (s(2) = " +
                      std::to_string(s[0]) + ")");
    return Perversity(n, std::move(s));
}

std::vector<Perversity> enumerate_perversities(int n, int bound) {
    if (n < 2) throw std::invalid_argument("enumerate_perversities: n must be >= 2");
    if (n > bound) throw BoundExceeded("enumerate_perversities: n exceeds bound");
    std::vector<Perversity> out;
    std::vector<int> v(n - 1, 0);
    // count in binary over growth choices at k = 3..n; lexicographic by values
    const int steps = n - 2;
    for (long mask = 0; mask < (1L << steps); ++mask) {
        for (int i = 0; i < steps; ++i) v[i + 1] = v[i] + ((mask >> i) & 1);
        out.emplace_back(n, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace strata
