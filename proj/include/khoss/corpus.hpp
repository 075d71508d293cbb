#pragma once

#include <string>
#include <vector>

#include "khoss/diagram.hpp"

namespace khoss {

// Corpus entries live as .diag files: a single line "pd <PD text>",
// "braid <k>: w1 w2 ...", or "unknot", plus optional "basepoint <edge>".
std::string corpus_dir_default();
std::vector<std::string> corpus_names(const std::string& dir);
LinkDiagram load_corpus(const std::string& dir, const std::string& name);

// "pd:...", "braid:...", "corpus:name" or a bare corpus name.
LinkDiagram load_input_spec(const std::string& spec, const std::string& corpus_dir);

}  // namespace khoss
