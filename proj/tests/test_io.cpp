#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "copsrobber/generators.hpp"
#include "copsrobber/io.hpp"

using namespace copsrobber;

TEST_CASE("graph files round-trip and allow comments") {
  const Graph g = petersen_graph();
  CHECK(parse_graph(graph_text(g)) == g);
  CHECK(parse_graph("# triangle\n3 3\n0 1 # first\n1 2\n\n2 0\n") == complete_graph(3));
}

TEST_CASE("malformed graph files are input errors") {
  CHECK_THROWS_AS(parse_graph(""), InputError);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 x\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 3\n"), InputError);
  CHECK_THROWS_AS(parse_graph("3 1\n0 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_graph("2 2\n0 1\n1 0\n"), InputError);
  try {
    parse_graph("2 1\n\n0 q\n");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("interval files round-trip with rational endpoints") {
  std::istringstream in("3\n0 1.5\n1/2 3\n2.75 4\n");
  const auto rep = read_intervals(in);
  CHECK(rep.size() == 3);
  CHECK(rep.intersection_graph() == path_graph(3));
  std::ostringstream out;
  write_intervals(out, rep);
  std::istringstream again(out.str());
  CHECK(read_intervals(again).intersection_graph() == rep.intersection_graph());

  std::istringstream dup("2\n0 1\n1 2\n");
  CHECK_THROWS_AS(read_intervals(dup), InputError);
  std::istringstream short_file("3\n0 1\n");
  CHECK_THROWS_AS(read_intervals(short_file), InputError);
}

TEST_CASE("tree decomposition files round-trip") {
  const auto td = theta_star_decomposition(3);
  std::ostringstream out;
  write_tree_decomposition(out, td);
  std::istringstream in(out.str());
  const auto back = read_tree_decomposition(in);
  CHECK(back.tree == td.tree);
  CHECK(back.bags == td.bags);

  std::istringstream bad_size("1 0\n0 3 1 2\n");
  CHECK_THROWS_AS(read_tree_decomposition(bad_size), InputError);
  std::istringstream repeated("2 1\n0 1 0\n0 1 1\n0 1\n");
  CHECK_THROWS_AS(read_tree_decomposition(repeated), InputError);
}

TEST_CASE("accessible annotation format") {
  CHECK(accessible_annotation(VertexSet{5, 1}, 6) == "X=1,5; v=6\n");
}

TEST_CASE("atomic writes leave no temporary behind") {
  const auto dir = std::filesystem::temp_directory_path() / "copsrobber_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "g.txt";
  atomic_write(path, "1 0\n");
  atomic_write(path, graph_text(complete_graph(2)));
  std::ifstream in(path);
  CHECK(read_graph(in) == complete_graph(2));
  CHECK_FALSE(std::filesystem::exists(dir / "g.txt.tmp"));
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(atomic_write(dir / "missing" / "x.txt", "x"), InputError);
}

TEST_CASE("key-value documents start with the schema version") {
  KeyValueDocument doc;
  doc.add("a", 1).add("b", true).add("c", "text");
  CHECK(doc.str() == "schema_version=1\na=1\nb=true\nc=text\n");
}
