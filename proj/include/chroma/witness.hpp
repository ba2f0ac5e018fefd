#pragma once

// Proof-guided extraction: given a properly colored graph that is too dense,
// produce the concrete substructure the density bound guarantees — a
// bichromatic fixed-length path, a tree embedding with leaves of two colors,
// or a double star with a non-monochromatic leaf set.
//
// The engine behind the path extractor: every density argument here ends in a
// "forced color chain" — a sequence of equal-length paths, each forcing its
// two endpoints to share a color (otherwise that path is itself the witness),
// whose extreme endpoints are adjacent.  A proper coloring cannot make every
// link monochromatic, so scanning the chain always yields a witness.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "chroma/graph.hpp"
#include "chroma/pattern.hpp"

namespace chroma {

struct ForcedChain {
  std::vector<PathWitness> links;  // consecutive links share an endpoint
  int target_length = 0;           // every link has exactly this many edges
};

// Returns the first link whose endpoint colors differ.  Throws
// CertificateError if the chain is structurally invalid against g.
PathWitness scan_forced_chain(const Graph& g, const ForcedChain& chain, const Coloring& c);

struct ExtractionTrace {
  struct Level {
    std::vector<std::pair<int, int>> removed;  // k-core deletions (vertex, degree)
    std::vector<int> component;                // chosen dense component
    std::vector<int> cycle;                    // smallest long cycle found there
    std::string case_label;                    // "l=2k+1" | "l=2k+2" | "l=2k+3" | "l>=2k+4"
    std::vector<std::pair<int, std::vector<int>>> outgoing;  // cycle vertex -> off-cycle neighbors
    int chain_links = 0;
    std::pair<int, int> chain_edge{-1, -1};    // adjacent pair the chain connects
    std::pair<int, int> deleted_pair{-1, -1};  // consecutive outgoing pair removed before recursing
    bool fallback = false;
    std::string note;
  };
  std::vector<Level> levels;
};

nlohmann::ordered_json trace_to_json(const ExtractionTrace& t);
// Re-validates every recorded step against the input graph.
bool replay_extraction_trace(const Graph& g, int k, const ExtractionTrace& t,
                             std::string* why = nullptr);

struct PathExtraction {
  PathWitness witness;
  ExtractionTrace trace;
};

// A bichromatic path with exactly 2k+1 edges.  Requires e(g) > k*n(g) and a
// proper coloring; never fails on such inputs.
PathExtraction extract_bichromatic_path(const ColoredGraph& cg, int k);

struct TreeEmbedding {
  std::vector<int> image;  // tree vertex -> host vertex
};

bool validate_embedding(const Graph& g, const TreePattern& t, const TreeEmbedding& emb);

// An embedding of t whose leaf images carry at least two colors.  Requires a
// MixedSides tree, e(g) > (k-1)*n(g) and a proper coloring.
TreeEmbedding embed_tree_bichromatic(const ColoredGraph& cg, const TreePattern& t);

struct DoubleStarExtraction {
  DoubleStarWitness witness;
  std::string method;  // "direct" | "pivot-nonadjacent" | "pivot-dominating" | "exhaustive"
  bool fallback = false;
};

// A copy of S_{a,b} whose leaf set carries at least two colors.  Requires
// 2*e(g) > (a+b)*n(g) and a proper coloring.
DoubleStarExtraction find_double_star_bichromatic(const ColoredGraph& cg, int a, int b);

}  // namespace chroma
