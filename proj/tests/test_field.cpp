#include <random>

#include "doctest.h"
#include "numberwall/field.hpp"

using namespace nwall;

TEST_CASE("modulus accepts primes only") {
    CHECK_NOTHROW(Modulus(2));
    CHECK_NOTHROW(Modulus(3));
    CHECK_NOTHROW(Modulus(101));
    CHECK_THROWS_AS(Modulus(1), DomainError);
    CHECK_THROWS_AS(Modulus(4), DomainError);
    CHECK_THROWS_AS(Modulus(91), DomainError);
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(7917));
}

TEST_CASE("addition examples") {
    const Modulus m3(3);
    CHECK((FieldElement(2, m3) + FieldElement(1, m3)).value() == 0);
    CHECK((FieldElement(2, m3) + FieldElement(2, m3)).value() == 1);
    const Modulus m7(7);
    for (int x = 0; x < 7; ++x) CHECK((FieldElement(0, m7) + FieldElement(x, m7)).value() == x);
}

TEST_CASE("multiplication, negation, subtraction examples") {
    const Modulus m3(3);
    CHECK((FieldElement(2, m3) * FieldElement(2, m3)).value() == 1);
    CHECK((-FieldElement(1, m3)).value() == 2);
    CHECK((FieldElement(0, m3) - FieldElement(1, m3)).value() == 2);
}

TEST_CASE("inverse examples and division by zero") {
    CHECK(inv(FieldElement(2, Modulus(3))).value() == 2);
    CHECK(inv(FieldElement(1, Modulus(11))).value() == 1);
    CHECK(inv(FieldElement(3, Modulus(7))).value() == 5);
    CHECK_THROWS_AS(inv(FieldElement(0, Modulus(5))), DivisionByZero);
    CHECK_THROWS_AS(SmallField(Modulus(5)).inv(0), DivisionByZero);
}

TEST_CASE("mixed moduli are rejected") {
    CHECK_THROWS_AS(FieldElement(1, Modulus(3)) + FieldElement(1, Modulus(5)), DomainError);
    CHECK_THROWS_AS(FieldElement(1, Modulus(3)) * FieldElement(1, Modulus(5)), DomainError);
}

TEST_CASE("values are reduced into [0, p)") {
    CHECK(FieldElement(-1, Modulus(3)).value() == 2);
    CHECK(FieldElement(10, Modulus(7)).value() == 3);
}

TEST_CASE("field laws on random triples") {
    std::mt19937_64 rng(17);
    for (int p : {2, 3, 5, 7, 11, 101, 251}) {
        const Modulus m(p);
        const SmallField f(m);
        std::uniform_int_distribution<int> d(0, p - 1);
        for (int trial = 0; trial < 500; ++trial) {
            const FieldElement a(d(rng), m), b(d(rng), m), c(d(rng), m);
            CHECK(((a + b) + c) == (a + (b + c)));
            CHECK(((a * b) * c) == (a * (b * c)));
            CHECK((a + b) == (b + a));
            CHECK((a * b) == (b * a));
            CHECK((a * (b + c)) == (a * b + a * c));
            CHECK((-a) == (FieldElement(0, m) - a));
            if (a.value() != 0) CHECK((a * inv(a)).value() == 1);
            CHECK(f.add(a.value(), b.value()) == (a + b).value());
            CHECK(f.mul(a.value(), b.value()) == (a * b).value());
            CHECK(f.sub(a.value(), b.value()) == (a - b).value());
            if (b.value() != 0) CHECK(f.div(a.value(), b.value()) == (a * inv(b)).value());
        }
    }
}

TEST_CASE("extended Euclid inverse matches every unit") {
    for (int p : {2, 3, 5, 13, 97}) {
        for (int a = 1; a < p; ++a) CHECK((static_cast<long long>(a) * inverse_mod(a, p)) % p == 1);
    }
}
