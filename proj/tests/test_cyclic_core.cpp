#include "prefixcert/cyclic_core.hpp"
#include "prefixcert/errors.hpp"

#include <doctest.h>

#include <random>

using namespace prefixcert;

namespace {

using Values = std::vector<Rational>;

// Brute-force oracle: every start k (1-based) whose n prefixes all satisfy the
// strict bound, computed with a fresh double loop and integer scaling
// (n * prefix vs h * j) instead of the library's c = h/n.
std::vector<std::size_t> oracle_starts(const Values& xs, const Rational& h, bool below) {
    const std::size_t n = xs.size();
    std::vector<std::size_t> starts;
    for (std::size_t k = 0; k < n; ++k) {
        Rational prefix;
        bool ok = true;
        for (std::size_t j = 1; j <= n && ok; ++j) {
            prefix += xs[(k + j - 1) % n];
            Rational lhs = prefix * Rational(static_cast<std::int64_t>(n));
            Rational rhs = h * Rational(static_cast<std::int64_t>(j));
            ok = below ? lhs < rhs : lhs > rhs;
        }
        if (ok) starts.push_back(k + 1);
    }
    return starts;
}

// Literal transcription of the greedy y-list loop: e counts covered
// positions, b is the next start.
std::vector<Block> oracle_blocks(const Values& xs, const Rational& c, std::size_t first) {
    const std::size_t n = xs.size();
    auto g = [&](std::size_t i) {
        Rational sum;
        for (std::size_t k = 1; k <= n; ++k) {
            sum += xs[(i - 1 + k - 1) % n];
            if (sum >= c * Rational(static_cast<std::int64_t>(k))) return k;
        }
        return std::size_t{0};
    };
    auto block_sum = [&](std::size_t b, std::size_t len) {
        Rational s;
        for (std::size_t i = 0; i < len; ++i) s += xs[(b - 1 + i) % n];
        return s;
    };
    std::vector<Block> out;
    std::size_t e = g(first);
    out.push_back({first, e, block_sum(first, e)});
    std::size_t b = e + 1;  // relative to `first`, 1-based
    while (e < n) {
        std::size_t pos = (first - 1 + b - 1) % n + 1;
        std::size_t len = g(pos);
        e = b + len - 1;
        out.push_back({pos, len, block_sum(pos, len)});
        b = e + 1;
    }
    return out;
}

Values ints(std::initializer_list<int> v) {
    Values out;
    for (int x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("total") {
    CHECK_THROWS_AS(CyclicList(Values{}), InputError);
    CHECK(total(CyclicList(ints({0}))) == Rational(0));
    CHECK(total(CyclicList(ints({1, 1, 1, 1}))) == Rational(4));
    CHECK(total(CyclicList({Rational(1, 2), Rational(-3, 2), Rational(2)})) == Rational(1));
}

TEST_CASE("scan_rotation examples") {
    auto a = scan_rotation(CyclicList(ints({1, 1, 1, 1})), 5, Direction::StrictlyBelow);
    REQUIRE(a);
    CHECK(a->k == 1);

    // Oracle: only start 2 of [2,0] stays under 3/2 * j.
    CHECK(oracle_starts(ints({2, 0}), 3, true) == std::vector<std::size_t>{2});
    auto b = scan_rotation(CyclicList(ints({2, 0})), 3, Direction::StrictlyBelow);
    REQUIRE(b);
    CHECK(b->k == 2);
    CHECK(b->prefix_sums == ints({0, 2}));

    CHECK_FALSE(scan_rotation(CyclicList(ints({1, 1})), 2, Direction::StrictlyBelow));
}

TEST_CASE("find_rotation examples") {
    auto a = find_rotation(CyclicList(ints({2, 0})), 3, Direction::StrictlyBelow);
    REQUIRE(a);
    CHECK(a->k == 2);
    CHECK(verify_certificate(CyclicList(ints({2, 0})), 3, *a));

    CHECK_FALSE(find_rotation(CyclicList(ints({-1, -1, -1})), 0, Direction::StrictlyAbove));

    CHECK(oracle_starts(ints({3, -1, -1}), 0, false) == std::vector<std::size_t>{1});
    auto c = find_rotation(CyclicList(ints({3, -1, -1})), 0, Direction::StrictlyAbove);
    REQUIRE(c);
    CHECK(c->k == 1);
    CHECK(c->prefix_sums == ints({3, 2, 1}));
}

TEST_CASE("single entry lists decide on one prefix") {
    CHECK(find_rotation(CyclicList(ints({2})), 3, Direction::StrictlyBelow));
    CHECK_FALSE(find_rotation(CyclicList(ints({3})), 3, Direction::StrictlyBelow));
    CHECK_FALSE(find_rotation(CyclicList(ints({3})), 3, Direction::StrictlyAbove));
}

TEST_CASE("verify_certificate") {
    CyclicList xs(ints({2, 0, 1}));
    auto cert = scan_rotation(xs, 4, Direction::StrictlyBelow);
    REQUIRE(cert);
    CHECK(verify_certificate(xs, 4, *cert));

    // Oracle rejects start 1 (2 >= 4/3), so moving k there must fail.
    auto good = oracle_starts(ints({2, 0, 1}), 4, true);
    CHECK(std::find(good.begin(), good.end(), 1) == good.end());
    RotationCertificate shifted = *cert;
    shifted.k = 1;
    shifted.prefix_sums = rotation_prefix_sums(xs, 1);
    CHECK_FALSE(verify_certificate(xs, 4, shifted));

    RotationCertificate tampered = *cert;
    tampered.prefix_sums[0] = tampered.prefix_sums[0] - Rational(1);
    CHECK_FALSE(verify_certificate(xs, 4, tampered));

    RotationCertificate short_table = *cert;
    short_table.prefix_sums.pop_back();
    CHECK_FALSE(verify_certificate(xs, 4, short_table));

    RotationCertificate malformed = *cert;
    malformed.k = 4;
    CHECK_THROWS_AS(verify_certificate(xs, 4, malformed), InputError);
    malformed.k = 0;
    CHECK_THROWS_AS(verify_certificate(xs, 4, malformed), InputError);
}

TEST_CASE("prefix_condition_all_starts examples") {
    auto a = prefix_condition_all_starts(CyclicList(ints({1, 1, 1, 1})), 4, WindowCondition::GeqSomewhere);
    CHECK(a.holds);
    CHECK(a.witnesses == std::vector<std::size_t>{1, 1, 1, 1});

    auto b = prefix_condition_all_starts(CyclicList(ints({0, 2})), 2, WindowCondition::GeqSomewhere);
    CHECK(b.holds);
    CHECK(b.witnesses == std::vector<std::size_t>{2, 1});

    auto c = prefix_condition_all_starts(CyclicList(ints({0, 1})), 2, WindowCondition::GeqSomewhere);
    CHECK_FALSE(c.holds);

    auto d = prefix_condition_all_starts(CyclicList(ints({2, 0})), 2, WindowCondition::LeqSomewhere);
    CHECK(d.holds);
    CHECK(d.witnesses == std::vector<std::size_t>{2, 1});
}

TEST_CASE("greedy_block_cover examples") {
    auto a = greedy_block_cover(CyclicList(ints({1, 1, 1, 1})), 1, 1);
    CHECK(a.blocks == std::vector<Block>{{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {4, 1, 1}});

    auto expected_b = oracle_blocks(ints({0, 2, 0, 2}), 1, 1);
    CHECK(expected_b == std::vector<Block>{{1, 2, 2}, {3, 2, 2}});
    CHECK(greedy_block_cover(CyclicList(ints({0, 2, 0, 2})), 1, 1).blocks == expected_b);

    // Start 1 is not where the witnesses peak (g = 3, 2, 1, 4), so the last block wraps.
    auto expected_c = oracle_blocks(ints({0, 0, 4, 0}), 1, 1);
    CHECK(expected_c == std::vector<Block>{{1, 3, 4}, {4, 4, 4}});
    auto c = greedy_block_cover(CyclicList(ints({0, 0, 4, 0})), 1, 1);
    CHECK(c.blocks == expected_c);
    CHECK(c.wraps(4));

    CHECK(max_witness_start(CyclicList(ints({0, 0, 4, 0})), 1, WindowCondition::GeqSomewhere) == 4);
    auto d = greedy_block_cover(CyclicList(ints({0, 0, 4, 0})), 1, 4);
    CHECK(d.blocks == std::vector<Block>{{4, 4, 4}});
    CHECK_FALSE(d.wraps(4));

    CHECK_THROWS_AS(greedy_block_cover(CyclicList(ints({0, 1})), 1, 1), InputError);
}

TEST_CASE("equality_certificate examples") {
    auto a = equality_certificate(CyclicList(ints({1, 1, 1})), BoundSpec{3});
    REQUIRE(a);
    CHECK(verify_equality_certificate(CyclicList(ints({1, 1, 1})), 3, *a));

    CHECK_FALSE(equality_certificate(CyclicList(ints({1, 1, 1})), BoundSpec{4}));

    // Oracle: above h - 1/2 = 5/2 the rotations at the 2 and at the 1 both
    // qualify; the one at the 0 does not.
    CHECK(oracle_starts(ints({2, 0, 1}), Rational(5, 2), false) == std::vector<std::size_t>{1, 3});
    auto c = equality_certificate(CyclicList(ints({2, 0, 1})), BoundSpec{3});
    REQUIRE(c);
    CHECK(c->k2() == 1);
    CHECK(verify_equality_certificate(CyclicList(ints({2, 0, 1})), 3, *c));

    CHECK_THROWS_AS(equality_certificate(CyclicList(ints({1})), BoundSpec{1, Rational(1)}), InputError);
    CHECK_THROWS_AS(equality_certificate(CyclicList(ints({1})), BoundSpec{1, Rational(0)}), InputError);
}

TEST_CASE("equality needs an integral gap between total and h") {
    // total = 5/2 sits within epsilon of h = 2, so both rotations exist
    // although total != h.
    CyclicList xs({Rational(1), Rational(3, 2)});
    CHECK(equality_certificate(xs, BoundSpec{2, Rational(3, 4)}));
    CHECK_FALSE(equality_certificate(xs, BoundSpec{2, Rational(1, 4)}));
}

namespace {

Values random_values(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> num(-8, 8), den(1, 4);
    Values v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(num(rng), den(rng));
    return v;
}

}  // namespace

TEST_CASE("property: certificate existence tracks the sign of total - h") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    std::uniform_int_distribution<int> hn(-40, 40), hd(1, 6);
    for (int trial = 0; trial < 2000; ++trial) {
        Values v = random_values(rng, len(rng));
        CyclicList xs(v);
        const Rational s = total(xs);
        for (Rational h : {s, s + Rational(1, 3), s - Rational(1, 3), Rational(hn(rng), hd(rng))}) {
            auto below = find_rotation(xs, h, Direction::StrictlyBelow);
            auto above = find_rotation(xs, h, Direction::StrictlyAbove);
            CHECK(below.has_value() == (s < h));
            CHECK(above.has_value() == (s > h));
            CHECK(below.has_value() == !oracle_starts(v, h, true).empty());
            if (below) CHECK(verify_certificate(xs, h, *below));
            if (above) CHECK(verify_certificate(xs, h, *above));
            auto scan = scan_rotation(xs, h, Direction::StrictlyBelow);
            CHECK(scan.has_value() == below.has_value());
            if (scan) CHECK(scan->k == oracle_starts(v, h, true).front());
        }
    }
}

TEST_CASE("property: exhaustive agreement and duality on small integer lists") {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<int> digits(n, 0);
        while (true) {
            Values v;
            for (int d : digits) v.emplace_back(d - 2);
            CyclicList xs(v);
            Values negated;
            for (const auto& x : v) negated.push_back(-x);
            CyclicList neg(negated);
            for (int hi = -6; hi <= 6; hi += 3) {
                const Rational h(hi);
                for (auto dir : {Direction::StrictlyBelow, Direction::StrictlyAbove}) {
                    auto fast = find_rotation(xs, h, dir);
                    auto slow = scan_rotation(xs, h, dir);
                    REQUIRE(fast.has_value() == slow.has_value());
                }
                auto below = find_rotation(xs, h, Direction::StrictlyBelow);
                auto dual = find_rotation(neg, -h, Direction::StrictlyAbove);
                REQUIRE(below.has_value() == dual.has_value());
            }
            std::size_t i = 0;
            while (i < n && ++digits[i] == 5) digits[i++] = 0;
            if (i == n) break;
        }
    }
}

TEST_CASE("property: window witnesses and greedy blocks") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> len(1, 10);
    for (int trial = 0; trial < 1500; ++trial) {
        Values v = random_values(rng, len(rng));
        CyclicList xs(v);
        const Rational s = total(xs);
        const std::int64_t n = static_cast<std::int64_t>(xs.size());
        for (Rational h : {s, s + Rational(1, 2), s - Rational(1, 2)}) {
            auto geq = prefix_condition_all_starts(xs, h, WindowCondition::GeqSomewhere);
            auto leq = prefix_condition_all_starts(xs, h, WindowCondition::LeqSomewhere);
            CHECK(geq.holds == (s >= h));
            CHECK(leq.holds == (s <= h));
            if (!geq.holds) continue;
            const Rational c = h / Rational(n);
            for (std::size_t start = 1; start <= xs.size(); ++start) {
                auto cover = greedy_block_cover(xs, c, start);
                CHECK(cover.blocks == oracle_blocks(v, c, start));
                for (const auto& b : cover.blocks) CHECK(b.sum >= c * Rational(static_cast<std::int64_t>(b.length)));
                CHECK(cover.covered() >= xs.size());
                CHECK(cover.covered() - cover.blocks.back().length < xs.size());
            }
            auto peak = greedy_block_cover(xs, c, max_witness_start(xs, c, WindowCondition::GeqSomewhere));
            CHECK(peak.covered() == xs.size());
        }
    }
}

TEST_CASE("property: equality certificate iff total == h for integral gaps") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    for (int trial = 0; trial < 1000; ++trial) {
        CyclicList xs(random_values(rng, len(rng)));
        const Rational s = total(xs);
        for (int offset = -2; offset <= 2; ++offset)
            for (Rational eps : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
                const Rational h = s + Rational(offset);
                auto cert = equality_certificate(xs, BoundSpec{h, eps});
                CHECK(cert.has_value() == (offset == 0));
                if (cert) CHECK(verify_equality_certificate(xs, h, *cert));
            }
    }
}
