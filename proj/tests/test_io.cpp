#include "bcolor/error.hpp"
#include "bcolor/fixtures.hpp"
#include "bcolor/io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <functional>
#include <fstream>
#include <random>
#include <sstream>

using namespace bcolor;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / ("bcolor_io_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path &path, const std::string &text) { std::ofstream(path) << text; }

std::string error_of(const std::function<void()> &action) {
  try {
    action();
  } catch (const InputError &e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("col round trip") {
  const Graph p = fixtures::petersen();
  std::stringstream buffer;
  io::write_col(buffer, p, "petersen");
  CHECK(buffer.str().rfind("c petersen\np edge 10 15\n", 0) == 0);
  CHECK(io::read_col(buffer).same_structure(p));
}

TEST_CASE("col reader accepts comments, blank lines and the col keyword") {
  std::istringstream in("c hello\n\np col 3 2\ne 1 2\r\nc mid\ne 2 3\n");
  const Graph g = io::read_col(in);
  CHECK(g.same_structure(path_graph(3)));
}

TEST_CASE("malformed graphs name the line") {
  auto read = [](const std::string &text) {
    return error_of([&] {
      std::istringstream in(text);
      io::read_col(in);
    });
  };
  CHECK(read("p edge 3 1\ne 1 4\n") == "graph:2: endpoint outside [1,3]");
  CHECK(read("p edge 3 1\ne 2 2\n") == "graph:2: self-loop at vertex 2");
  CHECK(read("e 1 2\n") == "graph:1: edge line before the problem line");
  CHECK(read("p edge 3 1\nx 1 2\n") == "graph:2: unknown line type 'x'");
  CHECK(read("p edge 3 1\ne 1 b\n") == "graph:2: expected a non-negative integer, got 'b'");
  CHECK(read("p edge 3 2\ne 1 2\n").find("declares 2 edges, found 1") != std::string::npos);
  CHECK(read("").find("missing") != std::string::npos);
}

TEST_CASE("graph files with labels round trip") {
  const fs::path dir = scratch("labels");
  const Graph h = fixtures::heawood();
  io::save_graph(dir / "heawood.col", h);
  CHECK(fs::exists(dir / "heawood.col.labels"));
  const Graph back = io::load_graph(dir / "heawood.col");
  CHECK(back.same_structure(h));
  CHECK(back.labels() == h.labels());

  io::save_graph(dir / "heawood.col", cycle_graph(5));
  CHECK_FALSE(fs::exists(dir / "heawood.col.labels"));
}

TEST_CASE("label sidecar errors") {
  const fs::path dir = scratch("badlabels");
  io::save_graph(dir / "g.col", path_graph(2));
  write_file(dir / "g.col.labels", "1 a\n1 b\n");
  CHECK(error_of([&] { io::load_graph(dir / "g.col"); }).find("g.col.labels: labels:2: vertex 1 labelled twice") !=
        std::string::npos);
  write_file(dir / "g.col.labels", "1 a\n2 a\n");
  CHECK(error_of([&] { io::load_graph(dir / "g.col"); }).find("duplicate label") != std::string::npos);
  CHECK(error_of([&] { io::load_graph(dir / "missing.col"); }).find("cannot open") != std::string::npos);
}

TEST_CASE("coloring round trip by label and by index") {
  const Graph cube = fixtures::q3();
  const Coloring c(2, {1, 2, 2, 1, 2, 1, 1, 2});
  std::stringstream buffer;
  io::write_coloring(buffer, cube, c);
  CHECK(buffer.str().rfind("k 2\n000 1\n001 2\n", 0) == 0);
  CHECK(io::read_coloring(buffer, cube) == c);

  std::istringstream by_index("k 3\n3 3\n1 1\n2 2\n");
  CHECK(io::read_coloring(by_index, complete_graph(3)) == Coloring(3, {1, 2, 3}));
}

TEST_CASE("malformed colorings name the line") {
  const Graph k3 = complete_graph(3);
  auto read = [&](const std::string &text) {
    return error_of([&] {
      std::istringstream in(text);
      io::read_coloring(in, k3);
    });
  };
  CHECK(read("1 1\n") == "coloring:1: expected 'k <number of colors>' first");
  CHECK(read("k 3\n1 1\n4 2\n") == "coloring:3: unknown vertex '4'");
  CHECK(read("k 3\n1 4\n") == "coloring:2: color 4 outside [1,3]");
  CHECK(read("k 3\n1 1\n1 2\n") == "coloring:3: vertex '1' colored twice");
  CHECK(read("k 3\n1 1\n2 2\n") == "coloring: vertex '3' has no color");
}

TEST_CASE("map files round trip with relative graph paths") {
  const fs::path dir = scratch("maps");
  const KneserStep step = kneser_step_hom(5, 2);
  io::save_graph(dir / "graphs" / "kg7_3.col", step.source->graph());
  io::save_graph(dir / "graphs" / "kg5_2.col", step.target->graph());
  io::save_map(dir / "step.map", step.map, "graphs/kg7_3.col", "graphs/kg5_2.col");

  const io::MapFile loaded = io::load_map(dir / "step.map");
  CHECK(loaded.source_file == dir / "graphs" / "kg7_3.col");
  CHECK(loaded.map.image() == step.map.image());
  CHECK(loaded.map.source().labels() == step.source->graph().labels());

  std::ifstream in(dir / "step.map");
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "map graphs/kg7_3.col graphs/kg5_2.col");
  CHECK(first == "{1,2,3} {1,2}");
}

TEST_CASE("malformed maps") {
  const fs::path dir = scratch("badmaps");
  io::save_graph(dir / "a.col", path_graph(3));
  io::save_graph(dir / "b.col", complete_graph(2));
  write_file(dir / "m.map", "map a.col b.col\n1 1\n2 2\n2 1\n");
  CHECK(error_of([&] { io::load_map(dir / "m.map"); }).find("m.map:4: source vertex '2' mapped twice") !=
        std::string::npos);
  write_file(dir / "m.map", "map a.col b.col\n1 1\n2 2\n");
  CHECK(error_of([&] { io::load_map(dir / "m.map"); }).find("source vertex '3' is not mapped") != std::string::npos);
  write_file(dir / "m.map", "map a.col b.col\n1 1\n2 3\n3 1\n");
  CHECK(error_of([&] { io::load_map(dir / "m.map"); }).find("m.map:3: unknown target vertex '3'") !=
        std::string::npos);
  write_file(dir / "m.map", "1 1\n");
  CHECK(error_of([&] { io::load_map(dir / "m.map"); }).find("m.map:1: expected 'map") != std::string::npos);
}

TEST_CASE("parse_vertex") {
  const Graph h = fixtures::heawood();
  CHECK(io::parse_vertex(h, "L1") == 7);
  CHECK(io::parse_vertex(h, "3") == 2);
  CHECK_THROWS_AS(io::parse_vertex(h, "15"), InputError);
  CHECK_THROWS_AS(io::parse_vertex(h, "Q"), InputError);
}

TEST_CASE("property: random graphs and colorings survive a write and read") {
  std::mt19937_64 rng(0x10);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + int(rng() % 20);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    std::stringstream buffer;
    io::write_col(buffer, g);
    const Graph back = io::read_col(buffer);
    CHECK(back.same_structure(g));
    CHECK(back.edges() == g.edges());

    const std::size_t k = 1 + rng() % 5;
    std::vector<Color> colors(n);
    for (auto &c : colors)
      c = Color(1 + rng() % k);
    const Coloring c(k, colors);
    std::stringstream cbuf;
    io::write_coloring(cbuf, g, c);
    CHECK(io::read_coloring(cbuf, g) == c);
  }
}

TEST_CASE("shipped data files match the built-in fixtures") {
  const fs::path data = BCOLOR_DATA_DIR;
  const auto four = fixtures::kg73_colorful_four();
  const Graph kg = io::load_graph(data / "kg73.col");
  CHECK(kg.same_structure(four.graph->graph()));
  CHECK(kg.labels() == four.graph->graph().labels());
  CHECK(io::load_coloring(data / "kg73.coloring", kg) == four.coloring);
  CHECK(io::load_coloring(data / "kg73_five.coloring", kg) == fixtures::kg73_colorful_five());
  CHECK(io::load_graph(data / "petersen.col").same_structure(fixtures::petersen()));
  CHECK(io::load_graph(data / "q3.col").same_structure(fixtures::q3()));
  CHECK(io::load_graph(data / "heawood.col").same_structure(fixtures::heawood()));
}
