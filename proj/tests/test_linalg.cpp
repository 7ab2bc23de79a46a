#include <random>

#include "doctest.h"
#include "prohecke/linalg.hpp"

using namespace prohecke;

namespace {

Scalar random_scalar(const Field& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> small(-6, 6);
    switch (f.kind()) {
        case FieldKind::Prime: return Scalar::from_int(f, small(rng));
        case FieldKind::Extension: {
            std::vector<int64_t> c(f.degree());
            for (auto& x : c) x = small(rng);
            return Scalar::ext_elt(f, c);
        }
        case FieldKind::Rational: {
            int d = 1 + static_cast<int>(rng() % 6);
            return Scalar::from_rational(Rational(small(rng), d));
        }
        case FieldKind::RationalFunction: {
            uint32_t p = f.characteristic();
            std::vector<uint32_t> a(3), b(3);
            for (auto& x : a) x = rng() % p;
            for (auto& x : b) x = rng() % p;
            b[2] = 1;
            int shift = small(rng) / 2;
            RatFunc r(PolyFp(p, a), PolyFp(p, b));
            return Scalar::from_ratfunc(r * RatFunc::monomial(p, 1, shift));
        }
    }
    return Scalar();
}

RatFunc rf(uint32_t p, std::vector<uint32_t> num, std::vector<uint32_t> den) {
    return RatFunc(PolyFp(p, std::move(num)), PolyFp(p, std::move(den)));
}

}  // namespace

TEST_CASE("rank and kernel of small matrices") {
    Field f2 = Field::prime(2);
    auto z = rank_and_kernel(ExactMatrix(f2, 3, 3));
    CHECK(z.rank == 0);
    REQUIRE(z.kernel_basis.size() == 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(z.kernel_basis[i][j].is_one() == (i == j));

    auto id = rank_and_kernel(ExactMatrix::identity(Field::rationals(), 4));
    CHECK(id.rank == 4);
    CHECK(id.kernel_basis.empty());

    auto m = ExactMatrix::from_rows(f2, {{Scalar::from_int(f2, 1), Scalar::from_int(f2, 1), Scalar::from_int(f2, 0)},
                                         {Scalar::from_int(f2, 0), Scalar::from_int(f2, 1), Scalar::from_int(f2, 1)}});
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 2);
    REQUIRE(rk.kernel_basis.size() == 1);
    for (const auto& s : rk.kernel_basis[0]) CHECK(s.is_one());
}

TEST_CASE("mixed fields are rejected") {
    Field f2 = Field::prime(2), f3 = Field::prime(3);
    CHECK_THROWS(Scalar::one(f2) + Scalar::one(f3));
    CHECK_THROWS(ExactMatrix::from_rows(f2, {{Scalar::one(f2), Scalar::one(f3)}}));
    CHECK_THROWS(Scalar::zero(Field::rationals()).inv());
}

TEST_CASE("kernel agrees with brute-force nullspace over F2") {
    Field f2 = Field::prime(2);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        ExactMatrix m(f2, rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::from_int(f2, rng() % 2);
        auto rk = rank_and_kernel(m);
        size_t null_count = 0;
        for (unsigned mask = 0; mask < (1u << cols); ++mask) {
            Vec v;
            for (size_t j = 0; j < cols; ++j) v.push_back(Scalar::from_int(f2, (mask >> j) & 1));
            if (is_zero_vec(m.apply(v))) ++null_count;
        }
        CHECK(null_count == (1u << rk.kernel_basis.size()));
        CHECK(rk.rank + rk.kernel_basis.size() == cols);
        for (const auto& k : rk.kernel_basis) CHECK(is_zero_vec(m.apply(k)));
    }
}

TEST_CASE("serial and parallel elimination agree") {
    for (Field f : {Field::prime(3), Field::rationals(), Field::extension(2, 2)}) {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 20; ++trial) {
            size_t rows = 1 + rng() % 7, cols = 1 + rng() % 7;
            ExactMatrix m(f, rows, cols);
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j)
                    m.at(i, j) = (rng() % 3 == 0) ? Scalar::zero(f) : random_scalar(f, rng);
            auto a = reduced_echelon(m, Exec::Serial);
            auto b = reduced_echelon(m, Exec::Parallel);
            CHECK(a.pivots == b.pivots);
            CHECK(a.reduced == b.reduced);
        }
    }
}

TEST_CASE("t-adic valuation") {
    Scalar a = Scalar::from_ratfunc(rf(3, {0, 0, 1}, {1, 1}));
    CHECK(t_adic_valuation(a) == 2);
    CHECK(t_adic_valuation(Scalar::zero(Field::rational_functions(3))) == kValInfinity);
    CHECK(t_adic_valuation(Scalar::from_ratfunc(rf(2, {1, 1}, {0, 1}))) == -1);
    CHECK(t_adic_valuation(Scalar::from_ratfunc(RatFunc::t(5))) == 1);
    CHECK_THROWS(t_adic_valuation(Scalar::one(Field::prime(2))));

    Field f = Field::rational_functions(3);
    std::mt19937 rng(3);
    for (int i = 0; i < 1000; ++i) {
        Scalar x = random_scalar(f, rng), y = random_scalar(f, rng);
        int vx = t_adic_valuation(x), vy = t_adic_valuation(y), vxy = t_adic_valuation(x * y);
        if (x.is_zero() || y.is_zero()) CHECK(vxy == kValInfinity);
        else CHECK(vxy == vx + vy);
    }
}

TEST_CASE("rational functions are stored reduced") {
    RatFunc r = rf(3, {1, 2, 1}, {2, 2});  // (1+t)^2 / (2(1+t))
    CHECK(r.den().is_one());
    CHECK(r.num() == PolyFp(3, {2, 2}));
    RatFunc s = rf(3, {0, 2}, {0, 0, 2, 2});  // 2t / (2t^2(1+t))
    CHECK(s.den() == PolyFp(3, {0, 1, 1}));
    CHECK(s.num() == PolyFp(3, {1}));
    CHECK(poly_gcd(s.num(), s.den()).is_one());
    CHECK(r * rf(3, {1, 1}, {1}).inv() == RatFunc::constant(3, 2));
    auto e = rf(2, {1}, {1, 1}).expansion(0, 5);  // 1/(1+t) over F2
    CHECK(e == std::vector<uint32_t>{1, 1, 1, 1, 1});
}

TEST_CASE("field axioms on random triples") {
    for (Field f : {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::extension(3, 2),
                    Field::rationals(), Field::rational_functions(2), Field::rational_functions(3)}) {
        std::mt19937 rng(17);
        for (int i = 0; i < 200; ++i) {
            Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inv() == Scalar::one(f));
            CHECK(a - a == Scalar::zero(f));
        }
    }
}

TEST_CASE("extension fields and roots of unity") {
    Field f4 = Field::extension(2, 2);
    CHECK(f4.ext()->modulus == PolyFp(2, {1, 1, 1}));
    Scalar z = primitive_root_of_unity(f4, 3);
    CHECK(z.pow(3).is_one());
    CHECK(!z.is_one());
    CHECK(primitive_root_of_unity(Field::prime(3), 2) == Scalar::from_int(Field::prime(3), -1));
    CHECK(primitive_root_of_unity(Field::rationals(), 2) == Scalar::from_int(Field::rationals(), -1));
    CHECK_THROWS(primitive_root_of_unity(Field::prime(2), 2));
    CHECK(primitive_root_mod(3) == 2);
    CHECK(primitive_root_mod(7) == 3);
}

TEST_CASE("incremental and sparse echelon forms match dense rank") {
    Field f = Field::prime(3);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        ExactMatrix m(f, rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = rng() % 2 ? Scalar::zero(f) : random_scalar(f, rng);
        EchelonBasis eb(f, cols);
        SparseEchelon se(f);
        for (size_t i = 0; i < rows; ++i) {
            eb.insert(m.row(i));
            SparseVec sv;
            for (size_t j = 0; j < cols; ++j)
                if (!m.at(i, j).is_zero()) sv.emplace(j, m.at(i, j));
            se.insert(sv);
        }
        size_t r = rank(m);
        CHECK(eb.size() == r);
        CHECK(se.rank() == r);
        for (size_t i = 0; i < rows; ++i) CHECK(eb.contains(m.row(i)));
        auto x = solve(m, m.apply(m.row(0).size() == cols ? Vec(cols, Scalar::one(f)) : Vec()));
        REQUIRE(x.has_value());
        CHECK(m.apply(*x) == m.apply(Vec(cols, Scalar::one(f))));
    }
}

TEST_CASE("quotient dimension with contracted two-term relations matches dense rank") {
    std::mt19937 rng(29);
    for (const Field& f : {Field::prime(2), Field::prime(3), Field::rationals()})
        for (int trial = 0; trial < 300; ++trial) {
            size_t cols = 1 + rng() % 9, nrels = rng() % 12;
            std::vector<SparseVec> rels;
            std::vector<Vec> dense;
            for (size_t r = 0; r < nrels; ++r) {
                size_t terms = 1 + rng() % 4;
                if (rng() % 3) terms = 2;
                SparseVec v;
                for (size_t t = 0; t < terms; ++t) {
                    Scalar a = random_scalar(f, rng);
                    if (a.is_zero()) a = Scalar::one(f);
                    sparse_axpy(Scalar::one(f), SparseVec{{rng() % cols, a}}, v);
                }
                Vec d = zero_vec(f, cols);
                for (const auto& [c, a] : v) d[c] = a;
                rels.push_back(v);
                dense.push_back(d);
            }
            size_t r = dense.empty() ? 0 : rank(ExactMatrix::from_rows(f, dense));
            CHECK(quotient_dimension(f, cols, rels) == cols - r);
        }
}
