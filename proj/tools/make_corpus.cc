// Writes a synthetic UD-parsed corpus as CoNLL-U.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ged/corpus.h"
#include "ged/synthetic.h"

int main(int argc, char** argv) {
  ged::SyntheticCorpusOptions options;
  std::string out;
  CLI::App app{"Generate a synthetic parsed corpus"};
  app.add_option("--sentences", options.sentences, "Number of sentences")
      ->capture_default_str();
  app.add_option("--seed", options.seed, "Random seed")->capture_default_str();
  app.add_option("--prefix", options.id_prefix, "Sentence id prefix")
      ->capture_default_str();
  app.add_option("--out", out, "Output .conllu file")->required();
  CLI11_PARSE(app, argc, argv);

  std::ofstream file(out, std::ios::binary);
  if (!file) {
    std::cerr << "make_corpus: cannot write " << out << "\n";
    return 1;
  }
  file << ged::WriteConllu(ged::GenerateSyntheticCorpus(options));
  return file ? 0 : 1;
}
