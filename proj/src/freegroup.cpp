#include "salemtwist/freegroup.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "salemtwist/error.hpp"

namespace salemtwist {

namespace {

void check_ranks(std::size_t a, std::size_t b, const char* op) {
  if (a != b)
    throw Error(ErrorCode::rank_mismatch,
                std::string(op) + ": rank " + std::to_string(a) + " vs rank " + std::to_string(b));
}

void check_generator(int g, std::size_t rank) {
  if (g < 1 || static_cast<std::size_t>(g) > rank)
    throw Error(ErrorCode::index_out_of_range,
                "generator " + std::to_string(g) + " outside [1, " + std::to_string(rank) + "]");
}

}  // namespace

Word Word::generator(std::size_t rank, int index, int sign) {
  const Letter l{index, sign};
  return reduce(std::span<const Letter>(&l, 1), rank);
}

std::vector<std::pair<int, int>> Word::runs() const {
  std::vector<std::pair<int, int>> out;
  for (const Letter& l : letters_) {
    if (!out.empty() && out.back().first == l.generator)
      out.back().second += l.sign;
    else
      out.emplace_back(l.generator, l.sign);
  }
  return out;
}

Word reduce(std::span<const Letter> letters, std::size_t rank) {
  Word w(rank);
  w.letters_.reserve(letters.size());
  for (const Letter& l : letters) {
    check_generator(l.generator, rank);
    if (l.sign != 1 && l.sign != -1)
      throw Error(ErrorCode::index_out_of_range, "letter sign must be +1 or -1");
    if (!w.letters_.empty() && w.letters_.back() == l.inverse())
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word cyclic_reduce(const Word& w) {
  const auto l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo] == l[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return reduce(l.subspan(lo, hi - lo), w.rank());
}

Word concat(const Word& u, const Word& v) {
  check_ranks(u.rank(), v.rank(), "concat");
  std::vector<Letter> all(u.letters().begin(), u.letters().end());
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return reduce(all, u.rank());
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return reduce(out, w.rank());
}

Endomorphism::Endomorphism(std::size_t rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  if (images_.size() != rank_)
    throw Error(ErrorCode::rank_mismatch, "endomorphism of rank " + std::to_string(rank_) + " needs " +
                                              std::to_string(rank_) + " images, got " + std::to_string(images_.size()));
  for (const Word& w : images_) check_ranks(w.rank(), rank_, "endomorphism image");
}

Endomorphism Endomorphism::identity(std::size_t rank) {
  std::vector<Word> images;
  images.reserve(rank);
  for (std::size_t g = 1; g <= rank; ++g) images.push_back(Word::generator(rank, static_cast<int>(g)));
  return Endomorphism(rank, std::move(images));
}

const Word& Endomorphism::image(int generator) const {
  check_generator(generator, rank_);
  return images_[static_cast<std::size_t>(generator - 1)];
}

Endomorphism Endomorphism::with_image(int generator, Word image) const {
  check_generator(generator, rank_);
  check_ranks(image.rank(), rank_, "with_image");
  Endomorphism copy = *this;
  copy.images_[static_cast<std::size_t>(generator - 1)] = std::move(image);
  return copy;
}

Word apply(const Endomorphism& phi, const Word& w) {
  check_ranks(phi.rank(), w.rank(), "apply");
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const auto img = phi.image(l.generator).letters();
    if (l.sign > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(it->inverse());
    }
  }
  return reduce(out, w.rank());
}

Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi) {
  check_ranks(phi.rank(), psi.rank(), "compose");
  std::vector<Word> images;
  images.reserve(psi.rank());
  for (const Word& w : psi.images()) images.push_back(apply(phi, w));
  return Endomorphism(psi.rank(), std::move(images));
}

bool endo_equal(const Endomorphism& phi, const Endomorphism& psi) {
  check_ranks(phi.rank(), psi.rank(), "endo_equal");
  return phi.images() == psi.images();
}

IntMatrix abelianization(const Endomorphism& phi) {
  IntMatrix m(phi.rank());
  for (std::size_t j = 0; j < phi.rank(); ++j)
    for (const Letter& l : phi.images()[j].letters()) m(static_cast<std::size_t>(l.generator - 1), j) += l.sign;
  return m;
}

std::vector<GrowthSample> growth_estimate(const Endomorphism& phi, int iterations) {
  if (iterations < 2) throw Error(ErrorCode::invalid_argument, "growth estimate needs at least 2 iterations");
  std::vector<Word> current = phi.images();
  std::vector<GrowthSample> out;
  std::size_t previous_total = phi.rank();  // every generator has length 1
  for (int k = 1; k <= iterations; ++k) {
    if (k > 1)
      for (Word& w : current) w = apply(phi, w);
    GrowthSample s;
    s.k = k;
    std::size_t total = 0;
    for (const Word& w : current) {
      const std::size_t cyc = cyclic_reduce(w).length();
      total += cyc;
      s.cyclic_length = std::max(s.cyclic_length, cyc);
      s.raw_length = std::max(s.raw_length, w.length());
    }
    const double inv_k = 1.0 / k;
    s.estimate = std::pow(static_cast<double>(s.cyclic_length), inv_k);
    s.raw_estimate = std::pow(static_cast<double>(s.raw_length), inv_k);
    s.ratio = previous_total == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(previous_total);
    previous_total = total;
    out.push_back(s);
  }
  return out;
}

std::string generator_name(std::size_t rank, int generator) {
  check_generator(generator, rank);
  if (rank < 2) throw Error(ErrorCode::invalid_argument, "generator names need rank at least 2");
  const auto n = static_cast<int>(rank) - 2;
  if (generator <= n) return "a" + std::to_string(generator);
  return generator == n + 1 ? "b1" : "c1";
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += generator_name(w.rank(), l.generator);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Word parse_word(std::string_view text, std::size_t rank) {
  if (rank < 2) throw Error(ErrorCode::invalid_argument, "generator names need rank at least 2");
  const auto n = static_cast<int>(rank) - 2;
  std::istringstream in{std::string(text)};
  std::vector<Letter> letters;
  std::string token;
  bool saw_identity = false;
  while (in >> token) {
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    auto fail = [&] { return Error(ErrorCode::parse_error, "bad letter '" + token + "'"); };
    const char kind = token[0];
    if (kind != 'a' && kind != 'b' && kind != 'c') throw fail();
    std::string_view rest(token);
    rest.remove_prefix(1);
    int sign = 1;
    if (const auto caret = rest.find('^'); caret != std::string_view::npos) {
      const auto exponent = rest.substr(caret + 1);
      if (exponent == "-1")
        sign = -1;
      else if (exponent != "1")
        throw fail();
      rest = rest.substr(0, caret);
    }
    int index = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), index);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) throw fail();
    int generator = 0;
    if (kind == 'a') {
      if (index < 1 || index > n) throw Error(ErrorCode::index_out_of_range, "letter '" + token + "' outside a1..a" + std::to_string(n));
      generator = index;
    } else {
      if (index != 1) throw Error(ErrorCode::index_out_of_range, "letter '" + token + "': only b1 and c1 exist");
      generator = kind == 'b' ? n + 1 : n + 2;
    }
    letters.push_back({generator, sign});
  }
  if (saw_identity && !letters.empty()) throw Error(ErrorCode::parse_error, "'1' stands for the whole empty word");
  if (!saw_identity && letters.empty()) throw Error(ErrorCode::parse_error, "empty word text; write 1");
  return reduce(letters, rank);
}

}  // namespace salemtwist
