// Writes the bundled corpus files into the given directory.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "itercat/corpus.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <dir>\n";
    return 2;
  }
  std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& name : itercat::bundled_files()) {
    std::ofstream out(dir / (name + ".cat"));
    out << itercat::export_workspace(itercat::bundled(name));
  }
  return 0;
}
