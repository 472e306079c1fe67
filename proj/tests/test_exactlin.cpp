#include "doctest.h"

#include <random>
#include <stdexcept>

#include "exactlin/bigint.hpp"
#include "exactlin/linalg.hpp"
#include "exactlin/scalar.hpp"

using namespace exactlin;

namespace {

// Independent oracle: plain Gauss-Jordan written directly on long doubles is
// useless here, so the oracle works over Scalar but assembles the elimination
// by explicit row steps rather than calling rref().
Matrix hand_eliminate_2x2(long long a, long long b, long long c, long long d) {
    // [[a,b],[c,d]] -> forward eliminate, then back substitute
    Vec r0 = {Scalar(a), Scalar(b)};
    Vec r1 = {Scalar(c), Scalar(d)};
    REQUIRE(!r0[0].is_zero());
    Scalar inv = r0[0].inv();
    r0 = vec_scale(inv, r0);
    vec_axpy(r1, -r1[0], r0);
    if (!r1[1].is_zero()) {
        r1 = vec_scale(r1[1].inv(), r1);
        vec_axpy(r0, -r0[1], r1);
    }
    Matrix m(2, 2);
    m.at(0, 0) = r0[0]; m.at(0, 1) = r0[1];
    m.at(1, 0) = r1[0]; m.at(1, 1) = r1[1];
    return m;
}

std::mt19937 rng(20240811);

Scalar random_scalar() {
    int num = static_cast<int>(rng() % 7) - 3;
    int den = 1 + static_cast<int>(rng() % 2);
    return Scalar(num, den);
}

Matrix random_matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar();
    return m;
}

}  // namespace

TEST_CASE("bigint arithmetic agrees with native on random 64-bit values") {
    std::mt19937_64 g(7);
    for (int iter = 0; iter < 500; ++iter) {
        long long a = static_cast<long long>(g() % 2000000000ULL) - 1000000000LL;
        long long b = static_cast<long long>(g() % 2000000000ULL) - 1000000000LL;
        BigInt A(a), B(b);
        CHECK((A + B).str() == std::to_string(a + b));
        CHECK((A - B).str() == std::to_string(a - b));
        CHECK((A * B).str() == std::to_string(a * b));
        if (b != 0) {
            CHECK((A / B).str() == std::to_string(a / b));
            CHECK((A % B).str() == std::to_string(a % b));
        }
    }
}

TEST_CASE("bigint divmod identity on multi-limb values") {
    std::mt19937_64 g(11);
    for (int iter = 0; iter < 200; ++iter) {
        BigInt a(static_cast<long long>(g()) / 2), b(static_cast<long long>(g()) / 2);
        a = a * a * a;  // force several limbs
        if (b.is_zero()) continue;
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint string round trip and gcd") {
    BigInt big = BigInt::from_string("123456789012345678901234567890");
    CHECK(big.str() == "123456789012345678901234567890");
    CHECK(BigInt::from_string("-42").str() == "-42");
    CHECK(BigInt::gcd(BigInt(12), BigInt(-18)).str() == "6");
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)).str() == "5");
    BigInt f(1);
    for (int i = 2; i <= 25; ++i) f *= BigInt(i);
    CHECK(f.str() == "15511210043330985984000000");  // 25!
    CHECK_THROWS_AS(BigInt::from_string("12a"), std::invalid_argument);
}

TEST_CASE("scalar canonical form and exactness") {
    CHECK(Scalar(2, 4) == Scalar(1, 2));
    CHECK(Scalar(1, -2).str() == "-1/2");
    CHECK(Scalar(0, 5).str() == "0");
    // (a/b)*(b/a) = 1
    Scalar a(3, 7);
    CHECK((a * a.inv()).is_one());
    CHECK((Scalar(-5, 3) / Scalar(-5, 3)).is_one());
    CHECK_THROWS_AS(Scalar(1, 0), std::domain_error);
    CHECK_THROWS_AS(Scalar(1).inv() / Scalar(0), std::domain_error);
}

TEST_CASE("prime field mode") {
    Field f5 = Field::Fp(5);
    CHECK(f5(7) == f5(2));
    CHECK((f5(3) + f5(4)).str() == "2");
    CHECK((f5(2) * f5(3)).str() == "1");
    CHECK((f5(1) / f5(2)).str() == "3");  // 2 * 3 = 6 = 1 mod 5
    // rational literal lifts into the prime field on contact
    CHECK((f5(1) * Scalar(1, 2)).str() == "3");
    CHECK_THROWS_AS(Field::Fp(6), std::invalid_argument);
    CHECK_THROWS_AS(f5(1) * Field::Fp(7)(1), std::logic_error);
    // 1/2 has no image in F_2
    Field f2 = Field::Fp(2);
    CHECK_THROWS_AS(f2(1) * Scalar(1, 2), std::domain_error);
}

TEST_CASE("rref identity and rank-1 cases") {
    Matrix id = Matrix::identity(2);
    auto rr = rref(id);
    CHECK(rr.mat == id);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});

    Matrix m(2, 2);
    m.at(0, 0) = Scalar(2); m.at(0, 1) = Scalar(4);
    m.at(1, 0) = Scalar(1); m.at(1, 1) = Scalar(2);
    auto rr2 = rref(m);
    CHECK(rr2.pivots == std::vector<std::size_t>{0});
    CHECK(rr2.mat.at(0, 0) == Scalar(1));
    CHECK(rr2.mat.at(0, 1) == Scalar(2));
    CHECK(rr2.mat.at(1, 0).is_zero());
    CHECK(rr2.mat.at(1, 1).is_zero());
}

TEST_CASE("rref of [[1,2],[3,4]] matches hand elimination") {
    Matrix expected = hand_eliminate_2x2(1, 2, 3, 4);
    CHECK(expected == Matrix::identity(2));  // frozen from the oracle
    Matrix m(2, 2);
    m.at(0, 0) = Scalar(1); m.at(0, 1) = Scalar(2);
    m.at(1, 0) = Scalar(3); m.at(1, 1) = Scalar(4);
    auto rr = rref(m);
    CHECK(rr.mat == expected);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
}

TEST_CASE("nullspace basics") {
    Matrix z(3, 3);
    CHECK(nullspace(z).size() == 3);
    CHECK(nullspace(Matrix::identity(4)).empty());

    Matrix m(1, 2);
    m.at(0, 0) = Scalar(1); m.at(0, 1) = Scalar(1);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(!vec_is_zero(ns[0]));
    CHECK(ns[0][0] == -ns[0][1]);  // (1,-1) up to scale
    CHECK(vec_is_zero(m.apply(ns[0])));
}

TEST_CASE("solve_linear") {
    Matrix id = Matrix::identity(3);
    Vec rhs = {Scalar(1), Scalar(-2), Scalar(1, 3)};
    auto x = solve_linear(id, rhs);
    REQUIRE(x.has_value());
    CHECK(*x == rhs);

    Matrix m(1, 2);
    m.at(0, 0) = Scalar(1); m.at(0, 1) = Scalar(1);
    auto y = solve_linear(m, {Scalar(0)});
    REQUIRE(y.has_value());
    CHECK(((*y)[0] + (*y)[1]).is_zero());

    Matrix col(2, 1);
    col.at(0, 0) = Scalar(1); col.at(1, 0) = Scalar(1);
    CHECK(!solve_linear(col, {Scalar(1), Scalar(2)}).has_value());
    CHECK_THROWS_AS(solve_linear(col, {Scalar(1)}), std::invalid_argument);
}

TEST_CASE("subspace membership, equality, quotient") {
    Subspace s1 = Subspace::span({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}}, 2);
    Subspace s2 = Subspace::span({{Scalar(1), Scalar(1)}, {Scalar(1), Scalar(-1)}}, 2);
    CHECK(s1.equal(s2));
    CHECK(Subspace::span({{Scalar(1), Scalar(1)}}, 2).member({Scalar(2), Scalar(2)}));
    CHECK(!Subspace::span({{Scalar(1), Scalar(1)}}, 2).member({Scalar(2), Scalar(1)}));

    // pivot-complement oracle: span{(1,0,0)} pivots at column 0, so the coset
    // representatives are the unit vectors on columns 1 and 2
    Subspace line = Subspace::span({{Scalar(1), Scalar(0), Scalar(0)}}, 3);
    auto reps = line.quotient_basis();
    REQUIRE(reps.size() == 2);
    CHECK(reps[0] == Vec{Scalar(0), Scalar(1), Scalar(0)});
    CHECK(reps[1] == Vec{Scalar(0), Scalar(0), Scalar(1)});

    CHECK_THROWS_AS(Subspace::span({{Scalar(1)}, {Scalar(1), Scalar(2)}}, 1), std::invalid_argument);
}

TEST_CASE("rank-nullity and rref idempotence on random matrices") {
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        Matrix m = random_matrix(r, c);
        auto rr = rref(m);
        CHECK(rr.pivots.size() + nullspace(m).size() == c);
        auto rr2 = rref(rr.mat);
        CHECK(rr2.mat == rr.mat);
        for (const Vec& v : nullspace(m)) CHECK(vec_is_zero(m.apply(v)));
    }
}

TEST_CASE("subspace equality is an equivalence relation on random spans") {
    std::vector<Subspace> spaces;
    for (int i = 0; i < 12; ++i) {
        std::vector<Vec> gens;
        std::size_t count = 1 + rng() % 3;
        for (std::size_t k = 0; k < count; ++k) {
            Vec v(4);
            for (auto& s : v) s = random_scalar();
            gens.push_back(std::move(v));
        }
        spaces.push_back(Subspace::span(gens, 4));
    }
    for (const auto& a : spaces) {
        CHECK(a.equal(a));
        for (const auto& b : spaces) {
            CHECK(a.equal(b) == b.equal(a));
            if (!a.equal(b)) continue;
            for (const auto& c : spaces)
                if (b.equal(c)) CHECK(a.equal(c));
        }
    }
}

TEST_CASE("determinant and matrix helpers") {
    Matrix m(2, 2);
    m.at(0, 0) = Scalar(1); m.at(0, 1) = Scalar(2);
    m.at(1, 0) = Scalar(3); m.at(1, 1) = Scalar(4);
    CHECK(m.det() == Scalar(-2));
    CHECK(Matrix::identity(5).det().is_one());
    Matrix s(2, 2);  // singular
    s.at(0, 0) = Scalar(2); s.at(0, 1) = Scalar(4);
    s.at(1, 0) = Scalar(1); s.at(1, 1) = Scalar(2);
    CHECK(s.det().is_zero());
    CHECK(m.trace() == Scalar(5));
    CHECK(commutator(m, Matrix::identity(2)).is_zero());
}
