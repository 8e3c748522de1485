// Regenerates the bundled fixture files: the appendix graphs from
// standard_graph and the hand-transcribed Musiker counterexample.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "deg/fixtures.hpp"
#include "deg/graph.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const deg::AppendixTranscription& fx : deg::appendix_transcriptions()) {
    std::ofstream out(dir / (fx.name + ".json"));
    out << deg::graph_to_json(deg::standard_graph(fx.shape));
  }
  std::string musiker = deg::graph_to_json(deg::musiker_graph());
  {
    std::ofstream out(dir / "musiker.json");
    out << musiker;
  }
  std::cout << "musiker sha256: " << deg::sha256_hex(musiker) << "\n";
  return 0;
}
