#pragma once

// Rotation certificates for strict bounds on the sum of a cyclic list.
//
// For a list x_1..x_n with sum s and a target h (c = h/n):
//   s < h  iff some rotation k keeps every prefix x_k + ... + x_{k+j-1} < c*j,
//   s > h  iff some rotation keeps every prefix > c*j.
// Everything here is exact; indices in certificates are 1-based.

#include "prefixcert/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace prefixcert {

/// Nonempty list of rationals read cyclically; at(i) takes 1-based indices modulo n.
class CyclicList {
public:
    explicit CyclicList(std::vector<Rational> values);
    CyclicList(std::initializer_list<Rational> values)
        : CyclicList(std::vector<Rational>(values)) {}

    std::size_t size() const { return values_.size(); }
    const Rational& at(std::size_t one_based) const { return values_[(one_based - 1) % values_.size()]; }
    std::span<const Rational> values() const { return values_; }

private:
    std::vector<Rational> values_;
};

enum class Direction { StrictlyBelow, StrictlyAbove };

/// Target h(n) plus the slack used by equality certificates (0 < epsilon < 1).
struct BoundSpec {
    Rational h;
    Rational epsilon{1, 2};

    void validate() const;
};

/// Start index k (1-based) and the n prefix sums of the rotation starting at k.
/// prefix_sums[j-1] = x_k + ... + x_{k+j-1}.
struct RotationCertificate {
    Direction direction = Direction::StrictlyBelow;
    std::size_t k = 1;
    Rational h;
    std::vector<Rational> prefix_sums;
};

/// A below-(h+eps) rotation and an above-(h-eps) rotation; together they pin s = h
/// when s - h is an integer.
struct EqualityCertificate {
    RotationCertificate below;
    RotationCertificate above;
    Rational epsilon;

    std::size_t k1() const { return below.k; }
    std::size_t k2() const { return above.k; }
};

enum class WindowCondition { GeqSomewhere, LeqSomewhere };

/// Smallest window length from each start that meets the condition.
/// witnesses[i-1] is g_i, or 0 when start i has no qualifying window.
struct WindowWitnesses {
    bool holds = false;
    std::vector<std::size_t> witnesses;
};

struct Block {
    std::size_t start = 1;   // 1-based
    std::size_t length = 0;
    Rational sum;

    friend bool operator==(const Block&, const Block&) = default;
};

/// Consecutive blocks produced by the greedy construction. Only the last block
/// may run past position start + n - 1.
struct BlockCover {
    std::size_t start = 1;
    std::vector<Block> blocks;

    std::size_t covered() const;
    bool wraps(std::size_t n) const { return covered() > n; }
};

Rational total(const CyclicList& xs);

/// Prefix sums of the rotation starting at k (1-based).
std::vector<Rational> rotation_prefix_sums(const CyclicList& xs, std::size_t k);

/// Exhaustive O(n^2) search; returns the certificate with the smallest k.
std::optional<RotationCertificate> scan_rotation(const CyclicList& xs, const Rational& h, Direction direction);

/// O(n) candidate from the last extremum of the running prefix of (x_i - c),
/// verified, with scan_rotation as fallback. Existence always matches scan_rotation.
std::optional<RotationCertificate> find_rotation(const CyclicList& xs, const Rational& h, Direction direction);

/// Recomputes the prefix table for cert.k and checks every strict inequality.
/// Throws InputError when k is outside [1, n].
bool verify_certificate(const CyclicList& xs, const Rational& h, const RotationCertificate& cert);

WindowWitnesses prefix_condition_all_starts(const CyclicList& xs, const Rational& h, WindowCondition condition);

/// A start where the window witnesses attain their maximum (first such index).
/// Throws InputError if some start has no witness.
std::size_t max_witness_start(const CyclicList& xs, const Rational& c, WindowCondition condition);

/// Runs the greedy y-list construction from `start` with per-position average c:
/// the first block is the shortest window from `start` meeting the condition,
/// each following block is the shortest window from the next uncovered
/// position, until n positions are covered. Throws InputError if some start
/// has no qualifying window. When start is a max_witness_start the blocks
/// cover exactly n positions.
BlockCover greedy_block_cover(const CyclicList& xs, const Rational& c, std::size_t start,
                              WindowCondition condition = WindowCondition::GeqSomewhere);

std::optional<EqualityCertificate> equality_certificate(const CyclicList& xs, const BoundSpec& bound);

bool verify_equality_certificate(const CyclicList& xs, const Rational& h, const EqualityCertificate& cert);

}  // namespace prefixcert
