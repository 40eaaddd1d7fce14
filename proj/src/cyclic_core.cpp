#include "prefixcert/cyclic_core.hpp"

#include "prefixcert/errors.hpp"

#include <algorithm>
#include <string>

namespace prefixcert {

namespace {

bool strictly_holds(Direction direction, const Rational& prefix, const Rational& bound) {
    return direction == Direction::StrictlyBelow ? prefix < bound : prefix > bound;
}

bool window_meets(WindowCondition condition, const Rational& sum, const Rational& bound) {
    return condition == WindowCondition::GeqSomewhere ? sum >= bound : sum <= bound;
}

bool rotation_qualifies(std::span<const Rational> prefix, const Rational& c, Direction direction) {
    for (std::size_t j = 1; j <= prefix.size(); ++j)
        if (!strictly_holds(direction, prefix[j - 1], c * Rational(static_cast<std::int64_t>(j))))
            return false;
    return true;
}

std::size_t normalize(std::size_t one_based, std::size_t n) { return (one_based - 1) % n + 1; }

RotationCertificate make_certificate(const CyclicList& xs, const Rational& h, Direction direction, std::size_t k) {
    return RotationCertificate{direction, k, h, rotation_prefix_sums(xs, k)};
}

}  // namespace

CyclicList::CyclicList(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) throw InputError("cyclic list must have at least one entry");
}

void BoundSpec::validate() const {
    if (epsilon <= Rational(0) || epsilon >= Rational(1))
        throw InputError("epsilon must satisfy 0 < epsilon < 1, got " + epsilon.to_string());
}

std::size_t BlockCover::covered() const {
    std::size_t sum = 0;
    for (const auto& b : blocks) sum += b.length;
    return sum;
}

Rational total(const CyclicList& xs) {
    Rational s;
    for (const auto& x : xs.values()) s += x;
    return s;
}

std::vector<Rational> rotation_prefix_sums(const CyclicList& xs, std::size_t k) {
    const std::size_t n = xs.size();
    if (k < 1 || k > n)
        throw InputError("rotation start " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
    std::vector<Rational> prefix;
    prefix.reserve(n);
    Rational running;
    for (std::size_t j = 1; j <= n; ++j) {
        running += xs.at(k + j - 1);
        prefix.push_back(running);
    }
    return prefix;
}

std::optional<RotationCertificate> scan_rotation(const CyclicList& xs, const Rational& h, Direction direction) {
    const Rational c = h / Rational(static_cast<std::int64_t>(xs.size()));
    for (std::size_t k = 1; k <= xs.size(); ++k) {
        auto prefix = rotation_prefix_sums(xs, k);
        if (rotation_qualifies(prefix, c, direction))
            return RotationCertificate{direction, k, h, std::move(prefix)};
    }
    return std::nullopt;
}

std::optional<RotationCertificate> find_rotation(const CyclicList& xs, const Rational& h, Direction direction) {
    const std::size_t n = xs.size();
    const Rational c = h / Rational(static_cast<std::int64_t>(n));

    // Running sums of (x_i - c); the rotation starts right after the last
    // maximum (below) or last minimum (above) among P_0..P_{n-1}.
    Rational running;
    Rational best;
    std::size_t best_pos = 0;
    for (std::size_t i = 1; i < n; ++i) {
        running += xs.at(i) - c;
        bool better = direction == Direction::StrictlyBelow ? running >= best : running <= best;
        if (better) {
            best = running;
            best_pos = i;
        }
    }
    const std::size_t candidate = best_pos + 1;
    auto cert = make_certificate(xs, h, direction, candidate);
    if (rotation_qualifies(cert.prefix_sums, c, direction)) return cert;
    return scan_rotation(xs, h, direction);
}

bool verify_certificate(const CyclicList& xs, const Rational& h, const RotationCertificate& cert) {
    const std::size_t n = xs.size();
    if (cert.k < 1 || cert.k > n)
        throw InputError("certificate start " + std::to_string(cert.k) + " outside [1, " + std::to_string(n) + "]");
    if (cert.prefix_sums.size() != n) return false;
    if (cert.prefix_sums != rotation_prefix_sums(xs, cert.k)) return false;
    return rotation_qualifies(cert.prefix_sums, h / Rational(static_cast<std::int64_t>(n)), cert.direction);
}

WindowWitnesses prefix_condition_all_starts(const CyclicList& xs, const Rational& h, WindowCondition condition) {
    const std::size_t n = xs.size();
    const Rational c = h / Rational(static_cast<std::int64_t>(n));
    WindowWitnesses result;
    result.holds = true;
    result.witnesses.assign(n, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        Rational sum;
        for (std::size_t k = 1; k <= n; ++k) {
            sum += xs.at(i + k - 1);
            if (window_meets(condition, sum, c * Rational(static_cast<std::int64_t>(k)))) {
                result.witnesses[i - 1] = k;
                break;
            }
        }
        if (result.witnesses[i - 1] == 0) result.holds = false;
    }
    return result;
}

std::size_t max_witness_start(const CyclicList& xs, const Rational& c, WindowCondition condition) {
    const auto w = prefix_condition_all_starts(xs, c * Rational(static_cast<std::int64_t>(xs.size())), condition);
    if (!w.holds) throw InputError("some start has no qualifying window");
    return static_cast<std::size_t>(std::max_element(w.witnesses.begin(), w.witnesses.end()) - w.witnesses.begin()) + 1;
}

BlockCover greedy_block_cover(const CyclicList& xs, const Rational& c, std::size_t start, WindowCondition condition) {
    const std::size_t n = xs.size();
    if (start < 1 || start > n)
        throw InputError("block cover start " + std::to_string(start) + " outside [1, " + std::to_string(n) + "]");
    const auto w = prefix_condition_all_starts(xs, c * Rational(static_cast<std::int64_t>(n)), condition);
    if (!w.holds) throw InputError("greedy block cover requires a qualifying window from every start");

    auto block_at = [&](std::size_t b) {
        Block block{b, w.witnesses[b - 1], Rational{}};
        for (std::size_t i = 0; i < block.length; ++i) block.sum += xs.at(b + i);
        return block;
    };

    BlockCover cover;
    cover.start = start;
    cover.blocks.push_back(block_at(start));
    std::size_t end = cover.blocks.back().length;  // positions covered so far
    while (end < n) {
        cover.blocks.push_back(block_at(normalize(start + end, n)));
        end += cover.blocks.back().length;
    }
    return cover;
}

std::optional<EqualityCertificate> equality_certificate(const CyclicList& xs, const BoundSpec& bound) {
    bound.validate();
    auto below = find_rotation(xs, bound.h + bound.epsilon, Direction::StrictlyBelow);
    if (!below) return std::nullopt;
    auto above = find_rotation(xs, bound.h - bound.epsilon, Direction::StrictlyAbove);
    if (!above) return std::nullopt;
    return EqualityCertificate{std::move(*below), std::move(*above), bound.epsilon};
}

bool verify_equality_certificate(const CyclicList& xs, const Rational& h, const EqualityCertificate& cert) {
    BoundSpec{h, cert.epsilon}.validate();
    return cert.below.direction == Direction::StrictlyBelow && cert.above.direction == Direction::StrictlyAbove &&
           cert.below.h == h + cert.epsilon && cert.above.h == h - cert.epsilon &&
           verify_certificate(xs, cert.below.h, cert.below) && verify_certificate(xs, cert.above.h, cert.above);
}

}  // namespace prefixcert
