// Named test varieties with their expected invariants.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multisecant/fano.hpp"

namespace msec {

struct SecancyExpectation {
  int k = 4;
  std::optional<int> sigma;       // max of the two components
  std::optional<int> sigma_true;  // lines of length >= k not on X; -1 when none
};

struct OrderExpectation {
  int k = 4;
  int q = 0;
};

struct Expectations {
  int dimension = 0;
  long degree = 0;
  bool smooth = true;
  std::optional<int> fano_dimension;
  std::optional<long> fano_degree;  // when the Fano scheme is finite
  std::vector<SecancyExpectation> secancy;
  std::vector<OrderExpectation> orders;
  std::optional<bool> in_quadric;
  std::optional<bool> in_cubic;
  bool stretch = false;  // long-running; a budget failure is tolerated
  std::string row;       // which classification row the entry stands for
};

struct CorpusEntry {
  std::string name;
  std::uint64_t seed = 0;
  Variety<Fp> variety;
  std::vector<PolyP> augmented;       // a second generating set of the same ideal
  std::vector<Line<Fp>> known_lines;  // lines on the variety, used as witnesses
  Expectations expected;
};

const std::vector<std::string>& corpus_names();

// Deterministic construction from the seed.  Random instances are screened
// for dimension, degree and smoothness; a failing seed moves on to the next
// one (bounded), and `seed` records the one actually used.
CorpusEntry build_entry(const std::string& name, std::uint64_t seed, std::uint32_t p = kDefaultPrime);

// Dimension of the degree-d part of the ideal.
long graded_part_dimension(const Ideal<Fp>& ideal, int degree);

struct CheckItem {
  std::string what;
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct CheckReport {
  std::string name;
  std::uint64_t seed = 0;
  bool complete = true;  // false when the pair budget ran out
  bool pass = true;
  std::vector<CheckItem> items;
  std::string error;
};

struct CheckOptions {
  std::vector<std::uint64_t> seeds{1, 2, 3};
  bool orders = true;
};

CheckReport check_entry(const CorpusEntry& entry, const CheckOptions& opts = {});

}  // namespace msec
