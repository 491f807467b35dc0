#include <random>

#include "doctest.h"
#include "hombox/errors.hpp"
#include "hombox/net.hpp"
#include "hombox/rational.hpp"
#include "hombox/tensor.hpp"

using namespace hombox;

namespace {

Tensor random_tensor(std::mt19937& rng, Shape shape) {
    Tensor t(shape);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = Rational(num(rng), den(rng));
    return t;
}

Tensor random_invertible(std::mt19937& rng, std::size_t n) {
    while (true) {
        Tensor m = random_tensor(rng, {n, n});
        if (is_invertible(m)) return m;
    }
}

}  // namespace

TEST_SUITE("kernel") {

TEST_CASE("rationals are canonical") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/0"), BadScalar);
    CHECK_THROWS_AS(Rational::parse("abc"), BadScalar);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("rationals overflow into big integers exactly") {
    Rational big(1);
    for (int i = 0; i < 100; ++i) big = big * Rational(3);
    Rational back = big;
    for (int i = 0; i < 100; ++i) back = back / Rational(3);
    CHECK(back == Rational(1));
    Rational m(std::numeric_limits<long long>::min());
    CHECK((-m).str() == "9223372036854775808");
    CHECK(Rational(std::numeric_limits<long long>::max()) + Rational(1) == -m);
    CHECK(big.str().size() == 48);
}

TEST_CASE("prime field mode reduces scalars") {
    {
        FieldScope fp(7);
        CHECK(Rational(10) == Rational(3));
        CHECK(Rational(1, 2) * Rational(2) == Rational(1));
        CHECK(Rational(1, 2) == Rational(4));
        CHECK_THROWS_AS(Rational(1, 7), BadScalar);
    }
    CHECK(Rational(10) != Rational(3));
    CHECK_THROWS_AS(FieldScope(8), BadParam);
}

TEST_CASE("tensor product") {
    Tensor a = Tensor::vector({1, 2});
    Tensor b = Tensor::vector({3});
    Tensor c = tensor_product(a, b);
    CHECK(c.shape() == Shape{2, 1});
    CHECK(c(0, 0) == Rational(3));
    CHECK(c(1, 0) == Rational(6));
    CHECK(tensor_product(a, Tensor::scalar(1)) == a);
    Tensor e = tensor_product(Tensor::basis_vector(2, 0), Tensor::basis_vector(2, 1));
    CHECK(e.nonzeros() == 1);
    CHECK(e(0, 1) == Rational(1));
}

TEST_CASE("contract") {
    Tensor v = Tensor::vector({5, 7});
    CHECK(contract(Tensor::identity(2), v, {{1, 0}}) == v);
    Tensor eps = Tensor::vector({1, 1}, "G*");
    Tensor unit = Tensor::vector({1, 0}, "G");
    CHECK(contract(eps, unit, {{0, 0}}) == Tensor::scalar(1));
    CHECK_THROWS_AS(contract(Tensor::identity(3), v, {{1, 0}}), AxisMismatch);
    CHECK_THROWS_AS(contract(Tensor::vector({1, 0}, "G"), Tensor::vector({1, 0}, "K"), {{0, 0}}), AxisMismatch);
    CHECK_NOTHROW(contract(Tensor::vector({1, 0}, "G"), Tensor::vector({1, 0}, "K"), {{0, 0}}, LabelCheck::skip));
    // the C2 group product g·g = 1
    Tensor m({2, 2, 2});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j, (i + j) % 2) = 1;
    Tensor g = Tensor::basis_vector(2, 1);
    CHECK(contract(contract(m, g, {{0, 0}}), g, {{0, 0}}) == Tensor::basis_vector(2, 0));
}

TEST_CASE("contract is bilinear") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        Tensor a = random_tensor(rng, {2, 3}), a2 = random_tensor(rng, {2, 3}), b = random_tensor(rng, {3, 2});
        CHECK(contract(a + a2, b, {{1, 0}}) == contract(a, b, {{1, 0}}) + contract(a2, b, {{1, 0}}));
        CHECK(contract(Rational(3, 2) * a, b, {{1, 0}}) == Rational(3, 2) * contract(a, b, {{1, 0}}));
    }
}

TEST_CASE("permute") {
    Tensor t({2, 3});
    for (std::size_t i = 0; i < 6; ++i) t[i] = Rational(static_cast<long long>(i));
    Tensor f = permute(t, {1, 0});
    CHECK(f.shape() == Shape{3, 2});
    CHECK(f == transpose(t));
    CHECK(permute(t, {0, 1}) == t);
    CHECK(permute(f, {1, 0}) == t);
    CHECK_THROWS_AS(permute(t, {0, 0}), BadPermutation);
    CHECK_THROWS_AS(permute(t, {0}), BadPermutation);
    std::mt19937 rng(3);
    Tensor r = random_tensor(rng, {2, 3, 4});
    CHECK(permute(permute(r, {2, 0, 1}), {1, 2, 0}) == r);
}

TEST_CASE("matrix inverse") {
    CHECK(mat_inverse(Tensor::identity(3)) == Tensor::identity(3));
    Tensor d = Tensor::matrix({{2, 0}, {0, 3}});
    CHECK(mat_inverse(d) == Tensor::matrix({{Rational(1, 2), 0}, {0, Rational(1, 3)}}));
    Tensor s = Tensor::matrix({{0, 1}, {1, 0}});
    CHECK(mat_inverse(s) == s);
    CHECK_THROWS_AS(mat_inverse(Tensor::matrix({{1, 2}, {2, 4}})), Singular);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Tensor m = random_invertible(rng, 4);
        CHECK(matmul(m, mat_inverse(m)) == Tensor::identity(4));
        CHECK(matmul(mat_inverse(m), m) == Tensor::identity(4));
    }
}

TEST_CASE("matrix powers") {
    Tensor s = Tensor::matrix({{0, 1}, {1, 0}});
    CHECK(mat_power(s, 0) == Tensor::identity(2));
    CHECK(mat_power(s, 2) == Tensor::identity(2));
    CHECK(mat_power(Tensor::matrix({{2, 0}, {0, 3}}), -1) == Tensor::matrix({{Rational(1, 2), 0}, {0, Rational(1, 3)}}));
    CHECK_THROWS_AS(mat_power(Tensor::matrix({{1, 1}, {1, 1}}), -1), Singular);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 3; ++trial) {
        Tensor m = random_invertible(rng, 3);
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j) CHECK(mat_power(m, i + j) == matmul(mat_power(m, i), mat_power(m, j)));
    }
}

TEST_CASE("kron places the first factor major") {
    Tensor a = Tensor::matrix({{1, 2}, {3, 4}});
    Tensor k = kron(a, Tensor::identity(2));
    CHECK(k.shape() == Shape{4, 4});
    CHECK(k(0, 2) == Rational(2));
    CHECK(k(3, 1) == Rational(3));
    CHECK(k(1, 0) == Rational(0));
}

TEST_CASE("net contraction matches dense contraction") {
    std::mt19937 rng(13);
    Tensor a = random_tensor(rng, {3, 2}), b = random_tensor(rng, {2, 4});
    Tensor want = contract(a, b, {{1, 0}});
    Net n = Net::constant(a, {"i", "k"}) * Net::constant(b, {"k", "j"});
    CHECK(n.collect({"i", "j"}) == want);
    CHECK(n.collect({"j", "i"}) == transpose(want));
    Net x = Net::input("x", 3).map("x", Tensor::matrix({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}}));
    CHECK(x.collect({"x", "@x"}) == Tensor::matrix({{1, 1, 0}, {0, 1, 0}, {0, 0, 2}}));
    Net sum = Net::constant(a, {"i", "k"}) + Net::constant(random_tensor(rng, {3, 2}), {"i", "k"}).scaled(0);
    CHECK(sum.collect({"i", "k"}) == a);
    CHECK_THROWS_AS(n.collect({"i"}), AxisMismatch);
}

}
