#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "legprod/errors.hpp"
#include "legprod/fixtures.hpp"
#include "legprod/model.hpp"

using namespace legprod;
namespace gen = legprod::testing;

namespace {

bool has_violation(const LegendrianModel& m, const std::string& name) {
    auto r = validate_model(m);
    return std::find(r.violations.begin(), r.violations.end(), name) != r.violations.end();
}

ErrorKind kind_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("validate_model accepts constructor output") {
    CHECK(validate_model(whitney(1, 1)).ok());
    CHECK(validate_model(whitney(2, 1)).ok());
    CHECK(validate_model(whitney(4, Rational(7, 3))).ok());
    CHECK(validate_model(whitney(3, 1, Sign::Positive)).ok());
}

TEST_CASE("validate_model names each violated invariant") {
    LegendrianModel m;
    m.dim = 1;
    m.morse = {{"m0", 0}};
    CHECK(has_violation(m, violation::kMorseEuler));

    LegendrianModel odd = whitney(1, 1);
    odd.dim = 3;
    odd.euler = 2;
    CHECK(has_violation(odd, violation::kOddEuler));

    LegendrianModel bad = whitney(2, 1);
    bad.cotangent_euler = 2;
    bad.chords.push_back({"w", 0, Sign::Positive});
    auto r = validate_model(bad);
    CHECK(has_violation(bad, violation::kCotangent));
    CHECK(has_violation(bad, violation::kChordLabels));
    CHECK(has_violation(bad, violation::kPositiveAction));
    CHECK(r.violations.size() >= 3);
    CHECK(kind_of([&] { require_valid(bad); }) == ErrorKind::InvalidModel);
}

TEST_CASE("chord_sum_tb") {
    CHECK(chord_sum_tb(whitney(1, 1)) == -1);
    LegendrianModel empty = whitney(1, 1);
    empty.chords.clear();
    CHECK(chord_sum_tb(empty) == 0);
    auto [trefoil, sys] = knot_fixture(KnotFixture::Trefoil, {{"c1", 10}, {"c2", 10}, {"c3", 1}, {"c4", 1}, {"c5", 1}});
    CHECK(chord_sum_tb(trefoil) == 1);
}

TEST_CASE("cotangent_euler convention") {
    CHECK(cotangent_euler(2, 2) == -2);
    CHECK(cotangent_euler(4, 2) == 2);
    CHECK(cotangent_euler(1, 0) == 0);
    for (int d = 1; d <= 8; ++d) {
        for (long long e : {-4, -2, 0, 2, 4}) CHECK(cotangent_euler(d, cotangent_euler(d, e)) == e);
    }
}

TEST_CASE("morse signs sum to the cotangent Euler number") {
    gen::Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        auto m = gen::random_model(rng, {gen::uniform(rng, 1, 5), 4, false});
        REQUIRE(validate_model(m).ok());
        long long sum = 0, alt = 0;
        for (const auto& p : m.morse) {
            sum += value(morse_sign(m.dim, p.index));
            alt += p.index % 2 == 0 ? 1 : -1;
        }
        CHECK(sum == m.cotangent_euler);
        CHECK(alt == m.euler);
        if (m.dim % 2 == 1) CHECK(m.cotangent_euler == 0);
    }
}

TEST_CASE("whitney sign table") {
    CHECK(whitney(1, 1).chords.at(0).sign == Sign::Negative);
    CHECK(chord_sum_tb(whitney(2, 1)) == 1);
    CHECK(chord_sum_tb(whitney(4, 1)) == -1);
    auto w = whitney(2, Rational(5, 2));
    CHECK(w.euler == 2);
    CHECK(w.cotangent_euler == -2);
    CHECK(w.chords.at(0).action == Rational(5, 2));
    CHECK(w.morse.size() == 2);
    CHECK(w.maslov.size() == 1);
    CHECK(kind_of([] { (void)whitney(3, 1); }) == ErrorKind::UnknownWhitneySign);
    CHECK(whitney(3, 1, Sign::Negative).chords.at(0).sign == Sign::Negative);
}

TEST_CASE("stabilize_with_cancelling_pair") {
    auto s = stabilize_with_cancelling_pair(whitney(1, 1), 3, 2, Sign::Positive);
    CHECK(s.chords.size() == 3);
    CHECK(chord_sum_tb(s) == -1);
    auto t = stabilize_with_cancelling_pair(s, 7, 5, Sign::Negative);
    CHECK(t.chords.size() == 5);
    CHECK(chord_sum_tb(t) == -1);
    CHECK(validate_model(t).ok());
    CHECK(kind_of([] { (void)stabilize_with_cancelling_pair(whitney(1, 1), 2, 2, Sign::Positive); }) ==
          ErrorKind::BadChordOrder);
    CHECK(kind_of([] { (void)stabilize_with_cancelling_pair(whitney(1, 1), 2, 3, Sign::Positive); }) ==
          ErrorKind::BadChordOrder);
}

TEST_CASE("stabilization preserves tb and everything but the chords") {
    gen::Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        auto m = gen::random_model(rng, {gen::uniform(rng, 1, 4), 5, false});
        Rational zb = gen::random_action(rng);
        Rational za = zb + gen::random_action(rng);
        auto s = stabilize_with_cancelling_pair(m, za, zb, gen::random_sign(rng));
        CHECK(chord_sum_tb(s) == chord_sum_tb(m));
        CHECK(s.chords.size() == m.chords.size() + 2);
        CHECK(std::equal(m.chords.begin(), m.chords.end(), s.chords.begin()));
        CHECK(s.morse == m.morse);
        CHECK(s.maslov == m.maslov);
        CHECK(validate_model(s).ok());
    }
}

TEST_CASE("knot fixtures") {
    auto [k1, s1] = knot_fixture(KnotFixture::StabilizedUnknot, {{"a1", 5}, {"a2", 5}});
    CHECK(chord_sum_tb(k1) == -2);
    CHECK(validate_model(k1).ok());
    auto [k2, s2] = knot_fixture(KnotFixture::R1Unknot, {{"b1", 10}, {"b2", 10}, {"b3", 3}});
    CHECK(chord_sum_tb(k2) == -1);
    CHECK(kind_of([] { (void)knot_fixture(KnotFixture::R1Unknot, {{"b1", 1}, {"b2", 1}, {"b3", 5}}); }) ==
          ErrorKind::ConstraintViolated);
    try {
        (void)knot_fixture(KnotFixture::R1Unknot, {{"b1", 1}, {"b2", 9}, {"b3", 5}});
    } catch (const Error& e) {
        CHECK(e.detail().find("b1 - b3 > 0") != std::string::npos);
    }
    CHECK(kind_of([] { (void)knot_fixture(KnotFixture::R1Unknot, {{"b1", 10}, {"b2", 10}}); }) ==
          ErrorKind::UnknownChord);
    CHECK(kind_of([] { (void)knot_fixture(KnotFixture::StabilizedUnknot, {{"a1", 1}, {"a2", 1}, {"zz", 1}}); }) ==
          ErrorKind::UnknownChord);
    CHECK(kind_of([] { (void)parse_fixture_name("figure_eight"); }) == ErrorKind::UnknownFixture);
    CHECK(parse_fixture_name("trefoil") == KnotFixture::Trefoil);
    CHECK(fixture_constraints(KnotFixture::Trefoil).constraints.size() == 5 + 6);
}
