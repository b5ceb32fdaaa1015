#include <doctest.h>

#include <sstream>

#include "imag/io.hpp"

using namespace imag;

TEST_CASE("state JSON round-trips bit-exactly") {
    DensityMatrix rho = random_density(3, 77);
    std::istringstream in(state_to_json(rho));
    DensityMatrix back = load_state_json(in);
    CHECK(max_abs(Matrix(back.matrix() - rho.matrix())) == 0.0);
}

TEST_CASE("state JSON rejects malformed input") {
    std::istringstream garbage("{not json");
    CHECK_THROWS_AS(load_state_json(garbage), ParseFailed);

    std::istringstream missing("{\"dim\": 2}");
    CHECK_THROWS_AS(load_state_json(missing), ParseFailed);

    std::istringstream short_row("{\"dim\": 2, \"matrix\": [[[1,0]], [[0,0],[0,0]]]}");
    CHECK_THROWS_AS(load_state_json(short_row), ParseFailed);

    std::istringstream bad_entry("{\"dim\": 1, \"matrix\": [[[1]]]}");
    CHECK_THROWS_AS(load_state_json(bad_entry), ParseFailed);
}

TEST_CASE("state JSON rejects invalid states") {
    std::istringstream trace_off(
        "{\"dim\": 2, \"matrix\": [[[0.6,0],[0,0]],[[0,0],[0.6,0]]]}");
    CHECK_THROWS_AS(load_state_json(trace_off), ValidationFailed);
}

TEST_CASE("operation JSON round-trips") {
    RealOperation op = random_real_channel(3, 2, 5);
    std::istringstream in(operation_to_json(op));
    RealOperation back = load_operation_json(in);
    REQUIRE(back.kraus().size() == op.kraus().size());
    for (std::size_t l = 0; l < op.kraus().size(); ++l) {
        CHECK(max_abs(RealMatrix(back.kraus()[l] - op.kraus()[l])) == 0.0);
    }

    std::istringstream overfull("{\"dim\": 1, \"kraus\": [[[2.0]]]}");
    CHECK_THROWS_AS(load_operation_json(overfull), ValidationFailed);
}

TEST_CASE("gaussian JSON round-trips and embeds the convention") {
    Rng rng(21);
    GaussianState g = random_gaussian_state(2, rng).state;
    const std::string text = gaussian_to_json(g);
    CHECK(text.find("q=a+ad, p=-i(a-ad)") != std::string::npos);
    std::istringstream in(text);
    GaussianState back = load_gaussian_json(in);
    CHECK(back.modes() == 2);
    CHECK((back.mean() - g.mean()).cwiseAbs().maxCoeff() == 0.0);
    CHECK(max_abs(RealMatrix(back.cov() - g.cov())) == 0.0);
}

TEST_CASE("gaussian JSON rejects uncertainty violations") {
    std::istringstream squeezed_past_vacuum(
        "{\"modes\": 1, \"mean\": [0,0], \"cov\": [[0.5,0],[0,0.5]]}");
    CHECK_THROWS_AS(load_gaussian_json(squeezed_past_vacuum), ValidationFailed);
}

TEST_CASE("format_double survives parse round trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-17, 123456.789, -0.0, 2.5e300}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(0.5) == "0.5");
}
