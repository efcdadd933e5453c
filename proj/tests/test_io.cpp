#include "coxwave/io.hpp"

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace coxwave;

TEST_CASE("rational strings round-trip exactly") {
  for (const char* s : {"0", "1", "-7", "3/4", "-22/7", "123456789123456789123/2"}) {
    Rat r = rat_from_string(s);
    CHECK(rat_from_string(rat_to_string(r)) == r);
  }
  CHECK(rat_to_string(Rat(4, 2)) == "2");
  CHECK_THROWS_AS(rat_from_string("x"), InvalidInputError);
  CHECK_THROWS_AS(rat_from_string("1/0"), InvalidInputError);
  CHECK_THROWS_AS(rat_from_string(""), InvalidInputError);
}

TEST_CASE("region JSON round-trips to exact rational equality") {
  Rng rng(0xc0de);
  SimpleSystem pi = simple_system(build_root_system(FamilySpec::parse("I2:4")));
  Frame frame(dual_basis(pi).matrix());
  for (int trial = 0; trial < 10; ++trial) {
    Region a = Region::from_disjoint_cells(frame, {oracles::random_box(rng, 2)});
    a = unite(a, Region::from_disjoint_cells(frame, {oracles::random_box(rng, 2)}));
    Region back = region_from_json(to_json(a));
    CHECK(back.frame().same_as(a.frame()));
    REQUIRE(back.cells().size() == a.cells().size());
    for (std::size_t i = 0; i < a.cells().size(); ++i)
      CHECK(back.cells()[i] == a.cells()[i]);
  }
}

TEST_CASE("lattice, scheme, signal and plan round-trip") {
  Frame id = Frame::identity(2);
  Lattice lat = Lattice::diagonal(id, {Rat(2, 3), Rat(1)});
  Lattice lat2 = lattice_from_json(to_json(lat));
  CHECK(lat2.generator().at(0, 0) == Rat(2, 3));
  CHECK(lat2.generator().at(1, 1) == Rat(1));

  DilationScheme scheme(id, {Rat(2), Rat(3)});
  DilationScheme scheme2 = scheme_from_json(to_json(scheme));
  CHECK(scheme2.scales() == scheme.scales());

  BandlimitedSignal f(id, {{Complex(0.5, -0.25), Box({Rat(0), Rat(0)}, {Rat(1, 2), Rat(1)})}});
  BandlimitedSignal f2 = signal_from_json(to_json(f));
  REQUIRE(f2.terms().size() == 1);
  CHECK(f2.terms()[0].coefficient == f.terms()[0].coefficient);
  CHECK(f2.terms()[0].spectrum == f.terms()[0].spectrum);

  Region p = Region::box(id, {Rat(0), Rat(0)}, {Rat(1), Rat(1)});
  SamplingPlan plan(p, spectrum_lattice_for_box(id, {Rat(1), Rat(1)}), 16, 1, scheme);
  SamplingPlan plan2 = plan_from_json(to_json(plan));
  CHECK(plan2.radius == 16);
  CHECK(plan2.level == 1);
  CHECK(plan2.p.cells().size() == 1);
}

TEST_CASE("group document carries the full structure") {
  RootSystem rs = build_root_system(FamilySpec::parse("I2:4"));
  SimpleSystem pi = simple_system(rs);
  DualBasis dual = dual_basis(pi);
  ReflectionGroup w = generate_group(rs);
  json doc = group_document(rs, pi, dual, w);
  CHECK(doc["dim"] == 2);
  CHECK(doc["family"] == "I2:4");
  CHECK(doc["roots"].size() == 8);
  CHECK(doc["simple"].size() == 2);
  CHECK(doc["dual"].size() == 2);
  CHECK(doc["elements"].size() == 8);
  // row-major matrices reconstruct
  Eigen::MatrixXd first = matrix_from_json(doc["elements"][0]);
  CHECK((first - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-15);
}

TEST_CASE("SVG export outlines every cell") {
  Region a = unite(
      Region::box(Frame::identity(2), {Rat(0), Rat(0)}, {Rat(1), Rat(1)}),
      Region::box(Frame::identity(2), {Rat(2), Rat(0)}, {Rat(3), Rat(2)}));
  std::string svg = svg_render({{&a, "#000000", "A"}});
  CHECK(svg.find("<svg") != std::string::npos);
  std::size_t paths = 0, pos = 0;
  while ((pos = svg.find("<path", pos)) != std::string::npos) {
    ++paths;
    pos += 5;
  }
  CHECK(paths == a.cells().size());
  CHECK(svg.find("fill=\"none\"") != std::string::npos);

  Region cube = Region::box(Frame::identity(3), {Rat(0), Rat(0), Rat(0)},
                            {Rat(1), Rat(1), Rat(1)});
  CHECK_THROWS_AS(svg_render({{&cube, "#000000", "C"}}), UnsupportedTransformError);
  CHECK(box_list_3d(cube, "C").size() == 1);
}

TEST_CASE("file helpers") {
  std::string path = "io_test_scratch.json";
  write_text_file(path, "{\"x\": [1, 2, 3]}\n");
  json j = read_json_file(path);
  CHECK(j["x"].size() == 3);
  CHECK_THROWS_AS(read_json_file("definitely_missing_file.json"), Error);
  std::remove(path.c_str());
}
