#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fftc/grring.hpp"

using namespace fftc;

namespace {

const FieldSpec QF = FieldSpec::rational();
Scalar q(long n, long d = 1) { return Scalar::from_mpq(mpq_class(n, d), QF); }

// Group ring Q[Z/2]: labels 1, g with g^2 = 1.
CommRing z2_ring() {
    CommRing r;
    r.field = QF;
    r.labels = {"1", "g"};
    r.mult.resize(4);
    r.mult[0] = {{0, q(1)}};
    r.mult[1] = {{1, q(1)}};
    r.mult[2] = {{1, q(1)}};
    r.mult[3] = {{0, q(1)}};
    r.unit = {q(1), q(0)};
    r.projectives = {{"P1", {q(1), q(0)}}};
    r.dual = {{"1", "1"}, {"g", "g"}};
    return r;
}

// Q[X]/(X^2) as a ring.
CommRing kx2_ring() {
    CommRing r;
    r.field = QF;
    r.labels = {"1", "X"};
    r.mult.resize(4);
    r.mult[0] = {{0, q(1)}};
    r.mult[1] = {{1, q(1)}};
    r.mult[2] = {{1, q(1)}};
    r.mult[3] = {};
    r.unit = {q(1), q(0)};
    return r;
}

// K0-style data of F_3[Z/3]: one simple class k, the projective cover class
// is 3[k] = 0 over the ground field F_3.
CommRing fp3_zp_ring() {
    FieldSpec f3 = FieldSpec::prime(3);
    CommRing r;
    r.field = f3;
    r.labels = {"k"};
    r.mult = {{{0, Scalar::one(f3)}}};
    r.unit = {Scalar::one(f3)};
    r.projectives = {{"P", {Scalar::zero(f3)}}};
    r.dual = {{"k", "k"}};
    return r;
}

}  // namespace

TEST_CASE("ring validation") {
    CHECK(validate_ring(z2_ring()).valid());
    CHECK(validate_ring(kx2_ring()).valid());
    CHECK(validate_ring(fp3_zp_ring()).valid());

    CommRing bad = z2_ring();
    bad.mult[1] = {{0, q(1)}};  // 1 * g = 1 breaks the unit law
    CHECK_FALSE(validate_ring(bad).valid());

    CommRing noncomm = z2_ring();
    noncomm.mult[2] = {{0, q(1)}};  // g * 1 != 1 * g
    CHECK_FALSE(validate_ring(noncomm).valid());

    CommRing short_proj = z2_ring();
    short_proj.projectives = {{"P1", {q(1)}}};
    CHECK_FALSE(validate_ring(short_proj).valid());
}

TEST_CASE("nilpotency of ring elements") {
    CommRing d = kx2_ring();
    CHECK(ring_element_power_nilpotent(d, {q(0), q(1)}));        // X
    CHECK_FALSE(ring_element_power_nilpotent(d, {q(1), q(1)}));  // 1 + X is a unit
    CHECK_FALSE(ring_element_power_nilpotent(d, d.unit));
    CHECK(ring_element_power_nilpotent(d, {q(0), q(0)}));

    CommRing g = z2_ring();
    CHECK_FALSE(ring_element_power_nilpotent(g, {q(1), q(-1)}));  // idempotent * 2
}

TEST_CASE("condition P picks the first non-nilpotent projective class") {
    CHECK(condition_p(z2_ring()) == std::optional<std::string>("P1"));
    CHECK_FALSE(condition_p(fp3_zp_ring()).has_value());  // [P] = 3[k] = 0 in char 3
    CHECK_FALSE(condition_p(kx2_ring()).has_value());     // no declared projectives
}

TEST_CASE("semisimplicity via the trace-form Gram") {
    CHECK(ring_semisimple(z2_ring()));
    CHECK_FALSE(ring_semisimple(kx2_ring()));  // Gram [[2, 0], [0, 0]] is singular
    CHECK_THROWS_AS(ring_semisimple(fp3_zp_ring()), Error);
}
