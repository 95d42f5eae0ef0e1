#include "alpwave/io.hpp"

#include "alpwave/filterbank.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace alpwave;

TEST_CASE("exact scalar grammar") {
    CHECK(to_string(ExactScalar()) == "0");
    CHECK(to_string(ExactScalar(7)) == "7");
    CHECK(to_string(ExactScalar(Rational(-3, 4))) == "-3/4");
    CHECK(to_string(ExactScalar(Rational(1), 5)) == "sqrt(5)");
    CHECK(to_string(ExactScalar(Rational(-1), 5)) == "-sqrt(5)");
    CHECK(to_string(ExactScalar(Rational(-1, 2), 6)) == "-1/2*sqrt(6)");
    CHECK(to_string(ExactScalar(Rational(2), 3)) == "2*sqrt(3)");

    CHECK(parse_exact_scalar("0") == ExactScalar());
    CHECK(parse_exact_scalar("-3/4") == ExactScalar(Rational(-3, 4)));
    CHECK(parse_exact_scalar("sqrt(5)") == ExactScalar(Rational(1), 5));
    CHECK(parse_exact_scalar("-1/2*sqrt(6)") == ExactScalar(Rational(-1, 2), 6));
    CHECK_THROWS(parse_exact_scalar(""));
    CHECK_THROWS(parse_exact_scalar("sqrt(6"));
    CHECK_THROWS(parse_exact_scalar("1/2*2"));
    CHECK_THROWS(parse_exact_scalar("one"));
}

TEST_CASE("surd sum grammar") {
    SurdSum v(ExactScalar(Rational(3, 4), 2));
    v += SurdSum(ExactScalar(Rational(-1, 6), 3));
    v += SurdSum(ExactScalar(Rational(-5)));
    CHECK(to_string(v) == "-5 + 3/4*sqrt(2) - 1/6*sqrt(3)");
    CHECK(parse_surd_sum(to_string(v)) == v);
    CHECK(to_string(SurdSum()) == "0");
    CHECK(parse_surd_sum("0") == SurdSum());
    CHECK_THROWS(parse_surd_sum("1 + "));
}

TEST_CASE("random round trips") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-30, 30);
    std::uniform_int_distribution<int> den(1, 24);
    std::uniform_int_distribution<int> surd(1, 40);
    for (int t = 0; t < 200; ++t) {
        const ExactScalar e(Rational(num(rng), den(rng)), surd(rng));
        CHECK(parse_exact_scalar(to_string(e)) == e);
        SurdSum s(e);
        s += SurdSum(ExactScalar(Rational(num(rng), den(rng)), surd(rng)));
        s += SurdSum(ExactScalar(Rational(num(rng), den(rng)), surd(rng)));
        CHECK(parse_surd_sum(to_string(s)) == s);
    }
}

TEST_CASE("shortest decimal form") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-3.0) == "-3");
    CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
    CHECK(std::stod(format_double(std::sqrt(2.0))) == std::sqrt(2.0));
}

TEST_CASE("matrix serialization") {
    const Matrix<ExactScalar> m = d1_matrix(3, D1Method::closed).d_plus1;
    const std::string csv = matrix_to_csv(m);
    CHECK(matrix_from_csv(csv) == m);
    CHECK(matrix_to_csv(matrix_from_csv(csv)) == csv);  // byte-stable
    const std::string js = matrix_to_json(m);
    CHECK(matrix_from_json(js) == m);
    CHECK(matrix_to_json(matrix_from_json(js)) == js);
    CHECK_THROWS(matrix_from_csv("[1, 2]\n[3]\n"));
    CHECK_THROWS(matrix_from_json("{\"rows\": 3}"));
}

TEST_CASE("signal files") {
    const Signal sig = project_exact(Polynomial<Rational>({Rational(1, 3), Rational(2)}), 1, 2);
    std::ostringstream os;
    write_signal(os, sig);
    CHECK(os.str().rfind("cell,degree,value\n", 0) == 0);

    Signal exact;
    SignalF approx;
    std::istringstream is(os.str());
    CHECK(read_signal(is, 1, 2, exact, approx));
    CHECK(exact.cells == sig.cells);

    // float fallback when a value is not in the exact grammar
    std::istringstream fs("cell,degree,value\n0,0,0.25\n0,1,0\n1,0,1\n1,1,0\n2,0,0\n2,1,0\n3,0,0\n3,1,0\n");
    CHECK_FALSE(read_signal(fs, 1, 2, exact, approx));
    CHECK(approx.cells[0][0] == 0.25);

    // declared shape must match the contents
    std::istringstream bad(os.str());
    CHECK_THROWS(read_signal(bad, 1, 3, exact, approx));
}

TEST_CASE("coefficient files") {
    const Signal sig = project_exact(
        Polynomial<Rational>({Rational(0), Rational(1), Rational(-1, 2), Rational(4)}), 2, 3);
    const Coeffs co = analyze(sig);
    std::ostringstream os;
    write_coeffs(os, co);
    CHECK(os.str().rfind("level,shift,degree,value\n-1,0,0,", 0) == 0);

    Coeffs exact;
    CoeffsF approx;
    std::istringstream is(os.str());
    CHECK(read_coeffs(is, 2, 3, exact, approx));
    CHECK(exact.scaling0 == co.scaling0);
    CHECK(exact.detail == co.detail);

    const CoeffsF cof = analyze(to_float(sig));
    std::ostringstream osf;
    write_coeffs(osf, cof);
    std::istringstream isf(osf.str());
    CHECK_FALSE(read_coeffs(isf, 2, 3, exact, approx));
    for (std::size_t j = 0; j < cof.scaling0.size(); ++j)
        CHECK(approx.scaling0[j] == cof.scaling0[j]);
}

TEST_CASE("write and re-read is byte-stable") {
    const Signal sig = project_exact(Polynomial<Rational>({Rational(5, 6), Rational(-7, 3)}), 1, 1);
    std::ostringstream a;
    write_signal(a, sig);
    Signal exact;
    SignalF approx;
    std::istringstream is(a.str());
    REQUIRE(read_signal(is, 1, 1, exact, approx));
    std::ostringstream b;
    write_signal(b, exact);
    CHECK(a.str() == b.str());
}
