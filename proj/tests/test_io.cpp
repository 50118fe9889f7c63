#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "tda/io.hpp"

#include "test_support.hpp"

using namespace tda;

TEST_CASE("real formatting round-trips at 17 significant digits") {
    for (double v : {0.1, std::sqrt(2.0), 1e-300, 123456.789, 0.0}) {
        CHECK(parse_real(format_real(v)) == v);
    }
    CHECK(format_real(infinity) == "inf");
    CHECK(parse_real("inf") == infinity);
    CHECK_THROWS_AS(parse_real("1.2.3"), tda_error);
    CHECK_THROWS_AS(parse_real("abc"), tda_error);
}

TEST_CASE("point cloud csv round trip") {
    point_cloud pc;
    pc.points = {{0.25, -1.5}, {std::sqrt(3.0), 0.125}};
    auto text = write_point_cloud_csv(pc);
    auto back = parse_point_cloud_csv(text);
    CHECK(back.points == pc.points);
    CHECK(write_point_cloud_csv(back) == text);

    CHECK_THROWS_AS(parse_point_cloud_csv(""), tda_error);
    CHECK_THROWS_AS(parse_point_cloud_csv("1,2\n3\n"), tda_error);
}

TEST_CASE("distance csv: square and lower-triangular forms") {
    tda_test::rng r(70);
    auto x = tda_test::random_generic_metric(r, 5);
    auto text = write_distance_csv(x);
    auto back = parse_distance_csv(text);
    REQUIRE(back.size() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(back(i, j) == x(i, j));
    CHECK(write_distance_csv(back) == text);

    // lower-triangular including the diagonal
    std::string lower = "0\n1,0\n1.5,1.2,0\n";
    auto lt = parse_distance_csv(lower);
    CHECK(lt.size() == 3);
    CHECK(lt(2, 0) == 1.5);
    CHECK(lt(0, 2) == 1.5);

    CHECK(looks_like_distance_matrix(text));
    CHECK(looks_like_distance_matrix(lower));
    CHECK(!looks_like_distance_matrix("1,2\n3,4\n"));   // nonzero diagonal
    CHECK(!looks_like_distance_matrix("0.5,0.25\n"));   // row shape

    CHECK_THROWS_AS(parse_distance_csv("0,1\n2,0\n"), tda_error); // asymmetric
    CHECK_THROWS_AS(parse_distance_csv("0,5\n5,0,0\n"), tda_error);
}

TEST_CASE("complex file round trip preserves the filtration") {
    tda_test::rng r(71);
    auto k = vietoris_rips(tda_test::random_generic_metric(r, 6), 1.7, 2);
    auto text = write_complex_file(k);
    auto back = parse_complex_file(text);
    REQUIRE(back.size() == k.size());
    CHECK(write_complex_file(back) == text);
    CHECK(back.closure_violations().empty());

    CHECK_THROWS_AS(parse_complex_file("0.5\n"), tda_error);
}

TEST_CASE("diagram file round trip with infinite deaths") {
    barcode b;
    b.add(0, {0.0, infinity});
    b.add(0, {0.0, 1.0});
    b.add(1, {1.0, std::sqrt(2.0)});
    auto text = write_diagram_file(b);
    CHECK(text.find("inf") != std::string::npos);
    auto back = parse_diagram_file(text);
    CHECK(write_diagram_file(back) == text);
    REQUIRE(back.dim(0).size() == 2);
    CHECK(back.dim(0)[1].death == infinity);
    CHECK(back.dim(1)[0].death == doctest::Approx(std::sqrt(2.0)));

    CHECK_THROWS_AS(parse_diagram_file("1 2\n"), tda_error);
}

TEST_CASE("zigzag file round trip") {
    zigzag_diagram z;
    z.p = 5;
    z.dims = {2, 1, 2};
    fp_matrix back_arrow(2, 1, 5);
    back_arrow.set(0, 0, 3);
    fp_matrix fwd_arrow(2, 1, 5);
    fwd_arrow.set(1, 0, 4);
    z.arrows.push_back({false, back_arrow});
    z.arrows.push_back({true, fwd_arrow});
    z.validate();

    auto text = write_zigzag_file(z);
    auto back = parse_zigzag_file(text);
    CHECK(back.p == 5);
    CHECK(back.dims == z.dims);
    CHECK(back.arrows[0].forward == false);
    CHECK(back.arrows[0].matrix.at(0, 0) == 3);
    CHECK(back.arrows[1].matrix.at(1, 0) == 4);
    CHECK(write_zigzag_file(back) == text);

    CHECK(write_zigzag_barcode({{1, 3}, {2, 2}}) == "1 3\n2 2\n");
    CHECK_THROWS_AS(parse_zigzag_file("2 4\n1 1\nF 1 1\n1\n"), tda_error); // p not prime
}

TEST_CASE("sensors json round trip") {
    sensor_input s;
    s.n = 4;
    s.detection_radius = 0.5;
    s.cover_radius = 0.3;
    s.edges = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    s.fence = {0, 1, 2, 3};
    auto text = write_sensors_json(s);
    auto back = parse_sensors_json(text);
    CHECK(back.n == 4);
    CHECK(back.detection_radius == 0.5);
    CHECK(back.cover_radius == 0.3);
    CHECK(back.edges == s.edges);
    CHECK(back.fence == s.fence);

    CHECK_THROWS_AS(parse_sensors_json("{"), tda_error);
    CHECK_THROWS_AS(parse_sensors_json("{\"n\": 3}"), tda_error);
}

TEST_CASE("image config json") {
    std::string cfg = R"({"xi_min":0,"xi_max":1,"eta_min":0,"eta_max":2,
                          "n_xi":4,"n_eta":8,"sigma":0.1})";
    auto c = parse_image_config_json(cfg);
    CHECK(c.n_eta == 8);
    CHECK(c.sigma == 0.1);
    CHECK(!c.eta_cap);

    // sigma is required: no silent default
    CHECK_THROWS_AS(parse_image_config_json(
                        R"({"xi_min":0,"xi_max":1,"eta_min":0,"eta_max":2,"n_xi":4,"n_eta":8})"),
                    tda_error);
}

TEST_CASE("features csv") {
    feature_vector f;
    f.items = {{"x_1_0", 2.0}, {"x_1_1", 8.0}};
    CHECK(write_features_csv(f) == "x_1_0,x_1_1\n2,8\n");
}

TEST_CASE("atomic write replaces files completely") {
    auto dir = std::filesystem::temp_directory_path() / "tda_io_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "out.txt").string();
    atomic_write(path, "first\n");
    atomic_write(path, "second\n");
    CHECK(read_file(path) == "second\n");
    CHECK(!std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
}
