#include "deg/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#ifndef DEG_BUNDLED_FIXTURES
#define DEG_BUNDLED_FIXTURES ""
#endif

// Pinned content hash of the canonical musiker.json bytes.
#ifndef DEG_MUSIKER_SHA256
#define DEG_MUSIKER_SHA256 "e67edcce1456df4552c94abed4bdf7cc3908faff0a16492f9041bda80095963d"
#endif

namespace deg {

std::filesystem::path fixtures_dir() {
  if (const char* env = std::getenv("DEG_FIXTURES"); env && *env) return env;
  return DEG_BUNDLED_FIXTURES;
}

namespace {

std::vector<FixtureEdge> g321_edges() {
  // Vertex names follow the appendix drawing of the graph on (3,2,1).
  static const std::map<std::string, std::string> tab = {
      {"b2", "1 2 6; 3 5; 4"}, {"a3", "1 3 6; 2 5; 4"}, {"a4", "1 4 6; 2 5; 3"},
      {"b5", "1 4 5; 2 6; 3"}, {"c2", "1 2 6; 3 4; 5"}, {"c5", "1 3 5; 2 6; 4"},
      {"d1", "1 3 6; 2 4; 5"}, {"d3", "1 2 5; 3 4; 6"}, {"d4", "1 2 5; 3 6; 4"},
      {"d6", "1 3 4; 2 6; 5"}, {"e2", "1 3 5; 2 4; 6"}, {"e5", "1 2 4; 3 6; 5"},
      {"f2", "1 3 4; 2 5; 6"}, {"g3", "1 2 4; 3 5; 6"}, {"g4", "1 2 3; 4 5; 6"},
      {"f5", "1 2 3; 4 6; 5"}};
  auto e = [&](const char* a, const char* b, std::vector<int> colors) {
    return FixtureEdge{tab.at(a), tab.at(b), std::move(colors)};
  };
  return {e("a3", "a4", {3, 4}), e("b2", "a3", {2}),    e("a4", "b5", {5}),
          e("b2", "c2", {4}),    e("b5", "c5", {3}),    e("d1", "c2", {2, 3}),
          e("c2", "d3", {5}),    e("d4", "c5", {2}),    e("c5", "d6", {4, 5}),
          e("d1", "e2", {5}),    e("e2", "d3", {2, 3}), e("d4", "e5", {4, 5}),
          e("e5", "d6", {2}),    e("e2", "f2", {4}),    e("f5", "e5", {3}),
          e("f2", "g3", {2}),    e("g4", "f5", {5}),    e("g3", "g4", {3, 4})};
}

}  // namespace

const std::vector<AppendixTranscription>& appendix_transcriptions() {
  static const std::vector<AppendixTranscription> data = [] {
    std::vector<AppendixTranscription> out;

    AppendixTranscription g51;
    g51.name = "g51";
    g51.shape = Partition::parse("5,1");
    {
      const char* t[] = {"1 3 4 5 6; 2", "1 2 4 5 6; 3", "1 2 3 5 6; 4", "1 2 3 4 6; 5",
                         "1 2 3 4 5; 6"};
      for (int i = 0; i < 4; ++i) g51.edges.push_back({t[i], t[i + 1], {i + 2}});
    }
    out.push_back(std::move(g51));

    AppendixTranscription g42;
    g42.name = "g42";
    g42.shape = Partition::parse("4,2");
    {
      std::map<std::string, std::string> tab = {
          {"a", "1 2 5 6; 3 4"}, {"b", "1 3 5 6; 2 4"}, {"c", "1 3 4 6; 2 5"},
          {"i", "1 3 4 5; 2 6"}, {"j", "1 2 4 6; 3 5"}, {"k", "1 2 3 6; 4 5"},
          {"z", "1 2 3 4; 5 6"}, {"y", "1 2 3 5; 4 6"}, {"x", "1 2 4 5; 3 6"}};
      auto e = [&](const char* a, const char* b, std::vector<int> c) {
        g42.edges.push_back({tab.at(a), tab.at(b), std::move(c)});
      };
      e("a", "b", {2, 3});
      e("b", "c", {4});
      e("c", "i", {5});
      e("c", "j", {2});
      e("i", "x", {2});
      e("j", "x", {5});
      e("j", "k", {3, 4});
      e("x", "y", {3});
      e("y", "z", {4, 5});
    }
    out.push_back(std::move(g42));

    AppendixTranscription g33;
    g33.name = "g33";
    g33.shape = Partition::parse("3,3");
    {
      std::map<std::string, std::string> tab = {{"w", "1 2 5; 3 4 6"},
                                                {"z", "1 2 3; 4 5 6"},
                                                {"y", "1 2 4; 3 5 6"},
                                                {"v", "1 3 5; 2 4 6"},
                                                {"x", "1 3 4; 2 5 6"}};
      auto e = [&](const char* a, const char* b, std::vector<int> c) {
        g33.edges.push_back({tab.at(a), tab.at(b), std::move(c)});
      };
      e("v", "w", {2, 3});
      e("x", "y", {2});
      e("y", "z", {3, 4});
      e("v", "x", {4, 5});
      e("w", "y", {5});
    }
    out.push_back(std::move(g33));

    AppendixTranscription g411;
    g411.name = "g411";
    g411.shape = Partition::parse("4,1,1");
    {
      std::map<std::string, std::string> tab = {
          {"a", "1 4 5 6; 2; 3"}, {"b", "1 3 5 6; 2; 4"}, {"c", "1 2 5 6; 3; 4"},
          {"d", "1 3 4 6; 2; 5"}, {"e", "1 2 4 6; 3; 5"}, {"f", "1 2 3 6; 4; 5"},
          {"g", "1 3 4 5; 2; 6"}, {"h", "1 2 4 5; 3; 6"}, {"i", "1 2 3 5; 4; 6"},
          {"j", "1 2 3 4; 5; 6"}};
      auto e = [&](const char* a, const char* b, std::vector<int> c) {
        g411.edges.push_back({tab.at(a), tab.at(b), std::move(c)});
      };
      e("a", "b", {3});
      e("b", "d", {4});
      e("c", "e", {4});
      e("d", "g", {5});
      e("e", "h", {5});
      e("f", "i", {5});
      e("b", "c", {2});
      e("d", "e", {2});
      e("e", "f", {3});
      e("g", "h", {2});
      e("h", "i", {3});
      e("i", "j", {4});
    }
    out.push_back(std::move(g411));

    AppendixTranscription g321;
    g321.name = "g321";
    g321.shape = Partition::parse("3,2,1");
    g321.edges = g321_edges();
    out.push_back(std::move(g321));

    return out;
  }();
  return data;
}

SignedColoredGraph musiker_graph() {
  // Two copies of the graph on (3,2,1); vertex v of copy c gets id 16*c + v.
  StandardGraphData base = standard_graph_data(Partition::parse("3,2,1"));
  std::map<std::string, int> index;
  for (int v = 0; v < base.graph.vertex_count(); ++v)
    index[base.tableaux[v].str()] = v;

  std::vector<Signature> sig;
  for (int copy = 0; copy < 2; ++copy)
    for (int v = 0; v < 16; ++v) sig.push_back(base.graph.sigma(v));
  SignedColoredGraph g(6, 6, std::move(sig));

  const std::string g4 = "1 2 3; 4 5; 6";
  const std::string f5 = "1 2 3; 4 6; 5";
  for (const FixtureEdge& e : g321_edges()) {
    bool crossing = (e.a == g4 && e.b == f5) || (e.a == f5 && e.b == g4);
    int u = index.at(e.a), v = index.at(e.b);
    for (int c : e.colors) {
      if (crossing) {  // the 5-edges between g4 and f5 swap copies
        g.add_edge(c, u, v + 16);
        g.add_edge(c, u + 16, v);
      } else {
        g.add_edge(c, u, v);
        g.add_edge(c, u + 16, v + 16);
      }
    }
  }
  return g;
}

const std::string& musiker_sha256() {
  static const std::string hash = DEG_MUSIKER_SHA256;
  return hash;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::vector<std::string> fixture_names() {
  return {"g51", "g42", "g33", "g411", "g321", "musiker"};
}

SignedColoredGraph load_fixture(const std::string& name) {
  std::filesystem::path file = fixtures_dir() / (name + ".json");
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open fixture " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string bytes = buf.str();
  if (name == "musiker" && sha256_hex(bytes) != musiker_sha256())
    throw std::runtime_error("fixture hash mismatch for " + file.string());
  return graph_from_json(bytes);
}

}  // namespace deg
