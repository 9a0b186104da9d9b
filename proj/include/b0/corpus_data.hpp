#pragma once

// Storage for the bundled corpus; definitions are generated at build time
// by cmake/embed_corpus.cmake.

namespace b0::detail {

struct CorpusFileData {
  const char* name;
  const char* text;
};

extern const CorpusFileData kCorpusFiles[];
extern const int kCorpusFileCount;
extern const char kExpectedJson[];

}  // namespace b0::detail
