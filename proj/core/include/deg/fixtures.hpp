#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "deg/graph.hpp"

namespace deg {

/// Fixture directory: $DEG_FIXTURES when set, else the bundled path.
std::filesystem::path fixtures_dir();

struct FixtureEdge {
  std::string a, b;        // tableau text of the endpoints
  std::vector<int> colors;
};

/// One hand-transcribed appendix graph: shape plus its edges, endpoints
/// named by tableau text.
struct AppendixTranscription {
  std::string name;  // file stem, e.g. "g42"
  Partition shape;
  std::vector<FixtureEdge> edges;
};

const std::vector<AppendixTranscription>& appendix_transcriptions();

/// The 32-vertex axiom-6 counterexample: two copies of the standard graph on
/// (3,2,1) with the two {g4,f5} 5-edges crossed between the copies.
SignedColoredGraph musiker_graph();

/// Pinned SHA-256 of the canonical musiker.json bytes.
const std::string& musiker_sha256();

std::string sha256_hex(const std::string& bytes);

/// Loads a bundled fixture by stem ("g51", ..., "musiker"); the musiker file
/// is verified against the pinned content hash.
SignedColoredGraph load_fixture(const std::string& name);

std::vector<std::string> fixture_names();

}  // namespace deg
