#include "lbrep/braid.hpp"

#include "lbrep/embeddings.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace lbrep {

void BraidWord::validate() const {
  if (strands < 2) throw std::invalid_argument("braid word: needs at least 2 strands");
  for (int letter : letters) {
    if (letter == 0 || letter >= strands || -letter >= strands) {
      throw std::invalid_argument("braid word: letter " + std::to_string(letter) + " outside +-1..+-" +
                                  std::to_string(strands - 1));
    }
  }
}

BraidWord BraidWord::inverse() const {
  BraidWord w{strands, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
  return w;
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (strands != other.strands) throw std::invalid_argument("braid words on different strand counts");
  BraidWord w = *this;
  w.letters.insert(w.letters.end(), other.letters.begin(), other.letters.end());
  return w;
}

BraidWord BraidWord::parse(int strands, std::string_view text) {
  BraidWord w{strands, {}};
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    auto first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string_view::npos) break;
      throw std::invalid_argument("braid word: empty letter in '" + std::string(text) + "'");
    }
    auto last = token.find_last_not_of(" \t");
    token = token.substr(first, last - first + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.empty()) throw std::invalid_argument("braid word: bad letter '" + token + "'");
    w.letters.push_back(value);
  }
  w.validate();
  return w;
}

std::string BraidWord::str() const {
  std::string s;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(letters[i]);
  }
  return s;
}

namespace {

using LocalState = std::array<int, 3>;

struct Transition {
  LocalState to;
  GroupRingElement coeff;
};

// sigma_i on the points of arcs (i-1, i, i+1). States with at most two
// points cover m = 1 and m = 2.
std::vector<Transition> local_action(const LocalState& s, const Context& ctx) {
  const auto one = GroupRingElement::integer(ctx, 1);
  const auto x = GroupRingElement::variable(ctx, "x");
  auto d = [&] { return GroupRingElement::variable(ctx, "d"); };
  const auto [a, b, c] = s;
  const int code = a * 9 + b * 3 + c;
  switch (code) {
    case 0: return {{{0, 0, 0}, one}};
    // one point
    case 9: return {{{1, 0, 0}, one}, {{0, 1, 0}, x}};
    case 3: return {{{0, 1, 0}, -x}};
    case 1: return {{{0, 1, 0}, one}, {{0, 0, 1}, one}};
    // two points
    case 18: return {{{2, 0, 0}, one}, {{1, 1, 0}, x}, {{0, 2, 0}, x * x}};
    case 12: return {{{1, 1, 0}, -x}, {{0, 2, 0}, -(x * x * (one + d()))}};
    case 6: return {{{0, 2, 0}, x * x * d()}};
    case 4: return {{{0, 1, 1}, -x}, {{0, 2, 0}, -(x * (one + d()))}};
    case 2: return {{{0, 0, 2}, one}, {{0, 1, 1}, one}, {{0, 2, 0}, one}};
    case 10: return {{{1, 0, 1}, one}, {{1, 1, 0}, one}, {{0, 1, 1}, x}, {{0, 2, 0}, x * (one + d())}};
    default: break;
  }
  throw std::logic_error("local braid action: unsupported state");
}

}  // namespace

RingMatrix generator_matrix(int n, int i, int m) {
  if (m != 1 && m != 2) {
    throw std::invalid_argument("generator_matrix: explicit matrices exist only for m = 1 and m = 2, got m = " +
                                std::to_string(m));
  }
  if (n < 2) throw std::invalid_argument("generator_matrix: needs n >= 2");
  if (i < 1 || i > n - 1) {
    throw std::invalid_argument("generator_matrix: generator index " + std::to_string(i) + " outside 1.." +
                                std::to_string(n - 1));
  }
  auto ctx = standard_context(m);
  const int l = n - 1;
  const auto comps = enumerate_compositions(l, m);
  RingMatrix mat(ctx, comps.size(), comps.size());
  const int left = i - 2;
  const int mid = i - 1;
  const int right = i;
  for (std::size_t col = 0; col < comps.size(); ++col) {
    const auto& e = comps[col];
    LocalState s{left >= 0 ? e[left] : 0, e[mid], right < l ? e[right] : 0};
    for (const auto& [to, coeff] : local_action(s, ctx)) {
      if ((left < 0 && to[0] != 0) || (right >= l && to[2] != 0)) {
        throw std::logic_error("local braid action moved a point onto a missing arc");
      }
      auto parts = e.parts();
      if (left >= 0) parts[left] = to[0];
      parts[mid] = to[1];
      if (right < l) parts[right] = to[2];
      mat(rank(Composition(parts)), col) += coeff;
    }
  }
  return mat;
}

Representation Representation::lawrence_bigelow(int n, int m) {
  std::vector<RingMatrix> gens;
  std::vector<RingMatrix> invs;
  for (int i = 1; i < n; ++i) {
    gens.push_back(generator_matrix(n, i, m));
    auto inv = gens.back().inverse();
    if (!inv) throw std::logic_error("generator matrix is not invertible over R");
    invs.push_back(std::move(*inv));
  }
  if (gens.empty()) throw std::invalid_argument("representation needs n >= 2");
  const std::string name = m == 1 ? "burau" : "lkb";
  return Representation(n, m, standard_context(m), name + ";columns=images;q=x,t=d;basis=colex-arcs", std::move(gens),
                        std::move(invs));
}

Representation Representation::dual(const Representation& rho) {
  std::vector<RingMatrix> gens;
  std::vector<RingMatrix> invs;
  for (std::size_t k = 0; k < rho.generators_.size(); ++k) {
    gens.push_back(rho.inverses_[k].involution().transpose());
    invs.push_back(rho.generators_[k].involution().transpose());
  }
  return Representation(rho.strands_, rho.points_, rho.context_, rho.convention_ + ";dual", std::move(gens),
                        std::move(invs));
}

const RingMatrix& Representation::letter(int letter) const {
  if (letter == 0 || letter >= strands_ || -letter >= strands_) {
    throw std::invalid_argument("letter " + std::to_string(letter) + " outside +-1..+-" + std::to_string(strands_ - 1));
  }
  return letter > 0 ? generators_[letter - 1] : inverses_[-letter - 1];
}

RingMatrix Representation::evaluate(const BraidWord& word) const {
  if (word.strands != strands_) {
    throw std::invalid_argument("braid word on " + std::to_string(word.strands) + " strands, representation on " +
                                std::to_string(strands_));
  }
  word.validate();
  auto result = RingMatrix::identity(context_, dimension());
  for (int l : word.letters) result = result * letter(l);
  return result;
}

Representation Representation::specialize(const std::map<std::string, Scalar>& values, const Context& target) const {
  std::vector<RingMatrix> gens;
  std::vector<RingMatrix> invs;
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    gens.push_back(lbrep::specialize(generators_[k], values, target));
    invs.push_back(lbrep::specialize(inverses_[k], values, target));
  }
  return Representation(strands_, points_, target, convention_ + ";specialized", std::move(gens), std::move(invs));
}

RingMatrix evaluate_word(const BraidWord& word, int m) {
  return Representation::lawrence_bigelow(word.strands, m).evaluate(word);
}

IntegralityCertificate conjugation_integrality(const std::vector<RingMatrix>& matrices,
                                               const std::vector<GroupRingElement>& diagonal) {
  for (const auto& entry : diagonal) {
    if (entry.is_zero()) throw std::domain_error("conjugation_integrality: zero diagonal entry");
  }
  IntegralityCertificate cert;
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const auto& m = matrices[k];
    if (m.rows() != diagonal.size() || m.cols() != diagonal.size()) {
      throw std::invalid_argument("conjugation_integrality: matrix and diagonal sizes differ");
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(r, c).is_zero()) continue;
        auto num = m(r, c) * diagonal[c];
        if (!divide_exact(num, diagonal[r])) {
          cert.integral = false;
          cert.failures.push_back(
              IntegralityFailure{static_cast<int>(k + 1), r, c, "(" + to_text(num) + ") / (" + to_text(diagonal[r]) + ")"});
        }
      }
    }
  }
  return cert;
}

IntegralityCertificate diagonal_conjugation_integrality(int n, int m) {
  SurfaceTriad triad{0, n, 0, m};
  auto d = embedding_matrix(triad, Direction::in, LocalSystemSpec::standard(m)).diagonal;
  std::vector<RingMatrix> gens;
  for (int i = 1; i < n; ++i) gens.push_back(generator_matrix(n, i, m));
  return conjugation_integrality(gens, d);
}

}  // namespace lbrep
