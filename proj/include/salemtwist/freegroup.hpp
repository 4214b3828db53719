#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "salemtwist/matrix.hpp"

namespace salemtwist {

// Generator indices are 1-based. For rank r = n + 2 the names are
// a1..an (1..n), b1 (n + 1) and c1 (n + 2).
struct Letter {
  int generator = 1;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {generator, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word. Every constructor reduces, so two Words compare
// equal exactly when they are the same group element.
class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  static Word generator(std::size_t rank, int index, int sign = 1);

  std::size_t rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Run-length form: (generator, signed exponent) pairs.
  std::vector<std::pair<int, int>> runs() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend Word reduce(std::span<const Letter> letters, std::size_t rank);
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

// Throws Error(index_out_of_range) for an index outside [1, rank] or a
// sign other than +-1.
Word reduce(std::span<const Letter> letters, std::size_t rank);
Word cyclic_reduce(const Word& w);
Word concat(const Word& u, const Word& v);
Word invert(const Word& w);

class Endomorphism {
 public:
  Endomorphism() = default;
  // images[g - 1] is the image of generator g.
  Endomorphism(std::size_t rank, std::vector<Word> images);

  static Endomorphism identity(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const Word& image(int generator) const;
  const std::vector<Word>& images() const { return images_; }
  Endomorphism with_image(int generator, Word image) const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<Word> images_;
};

Word apply(const Endomorphism& phi, const Word& w);
// (phi o psi)(g) = phi(psi(g))
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);
bool endo_equal(const Endomorphism& phi, const Endomorphism& psi);
// Entry (i, j) is the exponent sum of generator i + 1 in the image of
// generator j + 1.
IntMatrix abelianization(const Endomorphism& phi);

struct GrowthSample {
  int k = 0;
  std::size_t cyclic_length = 0;  // max over generators
  std::size_t raw_length = 0;     // max over generators
  double estimate = 0.0;          // max_g cyclic_length(g)^(1/k)
  double raw_estimate = 0.0;      // max_g raw_length(g)^(1/k)
  double ratio = 0.0;             // summed cyclic lengths, step k over step k-1
};

// One sample per k = 1..iterations. Throws for iterations < 2.
std::vector<GrowthSample> growth_estimate(const Endomorphism& phi, int iterations);

std::string generator_name(std::size_t rank, int generator);
// Space-separated letters such as "a3 a3^-1 b1 c1^-1"; the empty word is "1".
std::string format_word(const Word& w);
Word parse_word(std::string_view text, std::size_t rank);

}  // namespace salemtwist
