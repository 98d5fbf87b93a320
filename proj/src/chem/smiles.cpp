//
// Project leadopt - Copyright 2026 The leadopt Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "leadopt/chem/smiles.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace leadopt::chem {

namespace {

struct PendingBond {
  BondOrder order = BondOrder::kSingle;
  BondGeom geom = BondGeom::kNone;
  bool is_explicit = false;
  bool aromatic_explicit = false;  // ':' was written
};

struct RingOpening {
  uint32_t atom;
  PendingBond bond;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MolGraph run() {
    if (text_.empty()) throw SyntaxError("empty input");
    while (pos_ < text_.size()) {
      step();
    }
    if (!open_rings_.empty()) {
      throw SyntaxError("unclosed ring closure " + std::to_string(open_rings_.begin()->first));
    }
    if (!branch_stack_.empty()) throw SyntaxError("unclosed parenthesis");
    if (pending_.has_value()) throw SyntaxError("dangling bond at end of input");
    return std::move(builder_).finalize();
  }

 private:
  void step() {
    char c = text_[pos_];
    switch (c) {
      case '-': case '=': case '#': case ':': case '/': case '\\':
        read_bond(c);
        return;
      case '(':
        if (!prev_.has_value()) throw SyntaxError("branch with no preceding atom");
        if (pending_.has_value()) throw SyntaxError("bond before '('");
        branch_stack_.push_back(*prev_);
        last_token_was_open_ = true;
        ++pos_;
        return;
      case ')':
        if (branch_stack_.empty()) throw SyntaxError("unmatched ')'");
        if (pending_.has_value()) throw SyntaxError("dangling bond before ')'");
        if (last_token_was_open_) throw SyntaxError("empty branch");
        prev_ = branch_stack_.back();
        branch_stack_.pop_back();
        ++pos_;
        return;
      case '.':
        if (!branch_stack_.empty()) throw SyntaxError("dot inside branch");
        if (pending_.has_value()) throw SyntaxError("bond before '.'");
        prev_.reset();
        ++pos_;
        return;
      case '%': {
        ++pos_;
        if (pos_ + 2 > text_.size() || !std::isdigit(u(text_[pos_])) ||
            !std::isdigit(u(text_[pos_ + 1]))) {
          throw SyntaxError("'%' must be followed by two digits");
        }
        int num = (text_[pos_] - '0') * 10 + (text_[pos_ + 1] - '0');
        pos_ += 2;
        ring_closure(num);
        return;
      }
      default:
        break;
    }
    if (std::isdigit(u(c))) {
      ++pos_;
      ring_closure(c - '0');
      last_token_was_open_ = false;
      return;
    }
    if (c == '[') {
      read_bracket_atom();
      return;
    }
    if (std::isspace(u(c))) {
      // Allow trailing whitespace only.
      size_t rest = text_.find_first_not_of(" \t\r\n", pos_);
      if (rest != std::string_view::npos) {
        throw SyntaxError("unexpected whitespace inside SMILES");
      }
      pos_ = text_.size();
      return;
    }
    read_organic_atom();
  }

  static unsigned char u(char c) { return static_cast<unsigned char>(c); }

  void read_bond(char c) {
    if (pending_.has_value()) throw SyntaxError("two bond symbols in a row");
    if (!prev_.has_value()) throw SyntaxError("bond with no preceding atom");
    PendingBond p;
    p.is_explicit = true;
    switch (c) {
      case '-': p.order = BondOrder::kSingle; break;
      case '=': p.order = BondOrder::kDouble; break;
      case '#': p.order = BondOrder::kTriple; break;
      case ':': p.order = BondOrder::kAromatic; p.aromatic_explicit = true; break;
      case '/': p.order = BondOrder::kSingle; p.geom = BondGeom::kUp; break;
      case '\\': p.order = BondOrder::kSingle; p.geom = BondGeom::kDown; break;
    }
    pending_ = p;
    ++pos_;
    last_token_was_open_ = false;
  }

  void read_organic_atom() {
    Atom atom;
    std::string_view rest = text_.substr(pos_);
    size_t len = 0;
    // Two-character symbols first.
    if (rest.size() >= 2 && (rest.substr(0, 2) == "Cl" || rest.substr(0, 2) == "Br")) {
      len = 2;
    } else {
      char c = rest[0];
      switch (c) {
        case 'B': case 'C': case 'N': case 'O': case 'P': case 'S':
        case 'F': case 'I':
          len = 1;
          break;
        case 'b': case 'c': case 'n': case 'o': case 'p': case 's':
          len = 1;
          atom.aromatic = true;
          break;
        default:
          throw SyntaxError("unexpected character '" + std::string(1, c) + "'");
      }
    }
    auto z = element_from_symbol(rest.substr(0, len));
    if (!z.has_value()) throw SyntaxError("unknown element");
    atom.atomic_number = *z;
    atom.hydrogens = MolGraphBuilder::kImplicitH;
    pos_ += len;
    place_atom(atom);
  }

  void read_bracket_atom() {
    size_t end = text_.find(']', pos_);
    if (end == std::string_view::npos) throw SyntaxError("unterminated '['");
    std::string_view body = text_.substr(pos_ + 1, end - pos_ - 1);
    if (body.empty()) throw SyntaxError("empty bracket atom");

    Atom atom;
    atom.from_bracket = true;
    atom.hydrogens = 0;
    size_t i = 0;

    while (i < body.size() && std::isdigit(u(body[i]))) ++i;
    if (i > 0) {
      atom.isotope = static_cast<uint16_t>(std::stoi(std::string(body.substr(0, i))));
      if (atom.isotope == 0) throw SyntaxError("isotope 0");
    }

    size_t sym_start = i;
    if (i >= body.size()) throw SyntaxError("bracket atom without element");
    if (std::isupper(u(body[i]))) {
      ++i;
      if (i < body.size() && std::islower(u(body[i])) && body[i] != 'h') ++i;
    } else if (std::islower(u(body[i]))) {
      atom.aromatic = true;
      ++i;
      // two-letter aromatic symbols: se, as, te
      if (i < body.size() && std::islower(u(body[i])) &&
          element_from_symbol(body.substr(sym_start, 2)).has_value()) {
        ++i;
      }
    } else {
      throw SyntaxError("bad element symbol in bracket");
    }
    std::string_view symbol = body.substr(sym_start, i - sym_start);
    auto z = element_from_symbol(symbol);
    if (!z.has_value()) {
      throw SyntaxError("unknown element '" + std::string(symbol) + "'");
    }
    atom.atomic_number = *z;
    if (atom.aromatic && !element_info(*z).aromatic_capable) {
      throw SyntaxError("element '" + std::string(symbol) + "' cannot be aromatic");
    }

    if (i < body.size() && body[i] == '@') {
      ++i;
      if (i < body.size() && body[i] == '@') {
        atom.chirality = Chirality::kClockwise;
        ++i;
      } else {
        atom.chirality = Chirality::kAnticlockwise;
      }
    }

    if (i < body.size() && body[i] == 'H') {
      ++i;
      int count = 1;
      size_t d = i;
      while (d < body.size() && std::isdigit(u(body[d]))) ++d;
      if (d > i) {
        count = std::stoi(std::string(body.substr(i, d - i)));
        i = d;
      }
      if (count > 9) throw SyntaxError("implausible hydrogen count");
      atom.hydrogens = static_cast<uint8_t>(count);
    }

    if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
      int sign = body[i] == '+' ? 1 : -1;
      ++i;
      int magnitude = 1;
      if (i < body.size() && body[i] == body[i - 1]) {  // ++ / --
        magnitude = 2;
        ++i;
      } else {
        size_t d = i;
        while (d < body.size() && std::isdigit(u(body[d]))) ++d;
        if (d > i) {
          magnitude = std::stoi(std::string(body.substr(i, d - i)));
          i = d;
        }
      }
      if (magnitude > 4) throw SyntaxError("implausible formal charge");
      atom.charge = static_cast<int8_t>(sign * magnitude);
    }

    if (i < body.size() && body[i] == ':') {
      ++i;
      size_t d = i;
      while (d < body.size() && std::isdigit(u(body[d]))) ++d;
      if (d == i) throw SyntaxError("atom class without digits");
      i = d;  // atom class labels are accepted and dropped
    }

    if (i != body.size()) {
      throw SyntaxError("trailing characters in bracket atom: '" +
                        std::string(body.substr(i)) + "'");
    }

    pos_ = end + 1;
    place_atom(atom);
  }

  void place_atom(Atom atom) {
    uint32_t idx = builder_.add_atom(atom);
    if (prev_.has_value()) {
      connect(*prev_, idx, pending_);
    } else if (pending_.has_value()) {
      throw SyntaxError("bond with no preceding atom");
    }
    pending_.reset();
    prev_ = idx;
    last_token_was_open_ = false;
  }

  void ring_closure(int number) {
    if (!prev_.has_value()) throw SyntaxError("ring closure with no preceding atom");
    last_token_was_open_ = false;
    auto it = open_rings_.find(number);
    if (it == open_rings_.end()) {
      RingOpening opening;
      opening.atom = *prev_;
      if (pending_.has_value()) opening.bond = *pending_;
      open_rings_.emplace(number, opening);
      pending_.reset();
      return;
    }
    RingOpening opening = it->second;
    open_rings_.erase(it);
    if (opening.atom == *prev_) {
      throw SyntaxError("ring closure " + std::to_string(number) + " joins an atom to itself");
    }
    PendingBond closing;
    if (pending_.has_value()) closing = *pending_;
    pending_.reset();
    if (opening.bond.is_explicit && closing.is_explicit &&
        opening.bond.order != closing.order) {
      throw SyntaxError("conflicting orders on ring closure " + std::to_string(number));
    }
    std::optional<PendingBond> chosen;
    if (opening.bond.is_explicit) {
      chosen = opening.bond;
    } else if (closing.is_explicit) {
      chosen = closing;
    }
    connect(opening.atom, *prev_, chosen);
  }

  void connect(uint32_t a, uint32_t b, const std::optional<PendingBond>& pending) {
    BondOrder order;
    BondGeom geom = BondGeom::kNone;
    if (pending.has_value()) {
      order = pending->order;
      geom = pending->geom;
      if (pending->aromatic_explicit &&
          (!builder_.atom(a).aromatic || !builder_.atom(b).aromatic)) {
        throw SyntaxError("':' bond between non-aromatic atoms");
      }
    } else {
      // Unmarked bond: aromatic between two aromatic atoms, single otherwise.
      // finalize() demotes aromatic bonds that end up outside any ring.
      order = (builder_.atom(a).aromatic && builder_.atom(b).aromatic)
                  ? BondOrder::kAromatic
                  : BondOrder::kSingle;
    }
    builder_.add_bond(a, b, order, geom);
  }

  std::string_view text_;
  size_t pos_ = 0;
  MolGraphBuilder builder_;
  std::optional<uint32_t> prev_;
  std::optional<PendingBond> pending_;
  std::vector<uint32_t> branch_stack_;
  std::map<int, RingOpening> open_rings_;
  bool last_token_was_open_ = false;
};

}  // namespace

MolGraph parse_smiles(std::string_view text) {
  // Trim surrounding whitespace; SMILES files often carry a trailing newline.
  size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) throw SyntaxError("empty input");
  size_t last = text.find_last_not_of(" \t\r\n");
  return Parser(text.substr(begin, last - begin + 1)).run();
}

}  // namespace leadopt::chem
