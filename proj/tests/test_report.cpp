#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "pursuit/generators.hpp"
#include "pursuit/verify.hpp"

using namespace pursuit;

TEST_CASE("transcript json") {
  const Graph c5 = gen::cycle(5);
  ChaseCops cops;
  StationaryRobber robber(2);
  GameConfig cfg;
  cfg.cop_count = 1;
  cfg.max_rounds = 10;
  cfg.seed = 9;
  const Transcript t = play(c5, cops, robber, cfg);
  const Json j = to_json(t);
  CHECK(j["graph_hash"] == hex64(graph_hash(c5)));
  CHECK(j["graph_hash"].get<std::string>().size() == 16);
  CHECK(j["config"]["seed"] == 9);
  CHECK(j["initial_robber"] == 2);
  CHECK(j["rounds"].size() == t.rounds.size());
  CHECK(j["outcome"]["caught"] == true);
  CHECK(j["outcome"]["half"] == "cops");
  CHECK(j["rounds"].back()["robber"].is_null());
  CHECK(j.dump() == to_json(play(c5, cops, robber, cfg)).dump());
}

TEST_CASE("document and enclosures") {
  const Json d = document("x");
  CHECK(d.begin().key() == "schema");
  CHECK(d["schema"] == kSchema);
  CHECK(to_json(Enclosure{1, 2}).dump() == "[1.0,2.0]");
  CHECK(to_json(Enclosure{-INFINITY, -INFINITY}).dump() == R"(["-inf","-inf"])");
  const ChainReport none = check_induction_chain(1600, INFINITY);
  const Json j = to_json(none);
  CHECK(j["gap"] == "inf");
  CHECK(j["all_hold"] == false);
  CHECK(j["steps"].size() == 8);
}

TEST_CASE("plan and tree json") {
  const Graph k5 = gen::complete(5);
  ExpanderParams params;
  const auto found = find_family(k5, params, 1);
  REQUIRE(found);
  const Json plan = to_json(std::get<LevelDecomposition>((*found->plans)[0]));
  CHECK(plan["start"] == 0);
  CHECK(plan["levels"].size() >= 1);
  CHECK(to_json(found->family)["cop_count"] == found->family.cop_count());
  const RecursionTree tree = build_recursion(gen::cycle(12), {});
  const Json tj = to_json(tree);
  CHECK(tj["nodes"].size() == tree.nodes.size());
  CHECK(tj["team_size"] == tree.team_size());
}

TEST_CASE("zero budget skips instead of failing") {
  VerifyOptions opt;
  opt.budget = 0;
  opt.criteria = {1, 4, 8, 10};
  const VerifyReport r = run_verify(opt);
  REQUIRE(r.criteria.size() == 4);
  for (int i = 0; i < 3; ++i) CHECK(r.criteria[i].status == CheckStatus::Skip);
  CHECK(r.criteria[3].id == 10);
  CHECK(r.criteria[3].status == CheckStatus::Pass);
  CHECK_FALSE(r.any(CheckStatus::Fail));
  CHECK(r.to_json()["totals"]["skip"] == 3);
}

TEST_CASE("corpus files") {
  const auto dir = std::filesystem::temp_directory_path() / "pursuit_corpus_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream good(dir / "a_good.txt");
    write_edge_list(good, gen::grid(3, 3));
    std::ofstream bad(dir / "b_bad.txt");
    bad << "3 2\n0 1\n# comment\n1 7\n";
  }
  VerifyOptions opt;
  opt.criteria = {8};
  opt.corpus = dir.string();
  const VerifyReport r = run_verify(opt);
  REQUIRE(r.corpus.size() == 2);
  CHECK(r.corpus[0].name == "a_good.txt");
  CHECK(r.corpus[0].status == CheckStatus::Pass);
  CHECK(r.corpus[1].status == CheckStatus::Fail);
  CHECK(r.corpus[1].summary.find("line 4") != std::string::npos);
  std::filesystem::remove_all(dir);
}
