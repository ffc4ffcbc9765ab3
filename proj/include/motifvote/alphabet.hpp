#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace motifvote {

// A sequence is stored as indices into an ordered alphabet.
using SymbolString = std::vector<uint8_t>;

class Alphabet {
 public:
  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2 || symbols_.size() > 255)
      throw std::invalid_argument("Alphabet: need between 2 and 255 symbols");
    index_.fill(-1);
    for (size_t i = 0; i < symbols_.size(); ++i) {
      unsigned char up = static_cast<unsigned char>(std::toupper(static_cast<unsigned char>(symbols_[i])));
      unsigned char lo = static_cast<unsigned char>(std::tolower(up));
      if (index_[up] != -1) throw std::invalid_argument("Alphabet: duplicate symbol");
      index_[up] = static_cast<int16_t>(i);
      index_[lo] = static_cast<int16_t>(i);
      symbols_[i] = static_cast<char>(up);
    }
  }

  static Alphabet dna() { return Alphabet("ACGT"); }

  int size() const { return static_cast<int>(symbols_.size()); }

  char symbol(uint8_t index) const { return symbols_.at(index); }

  // -1 when the character is not part of the alphabet.
  int index_of(char ch) const { return index_[static_cast<unsigned char>(ch)]; }

  // Throws with the 1-based offset of the first bad character.
  SymbolString encode(std::string_view text) const {
    SymbolString out;
    out.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
      int idx = index_of(text[i]);
      if (idx < 0)
        throw std::invalid_argument("invalid symbol '" + std::string(1, text[i]) + "' at offset " +
                                    std::to_string(i + 1));
      out.push_back(static_cast<uint8_t>(idx));
    }
    return out;
  }

  std::string decode(const SymbolString& seq) const {
    std::string out;
    out.reserve(seq.size());
    for (uint8_t s : seq) out.push_back(symbol(s));
    return out;
  }

 private:
  std::string symbols_;
  std::array<int16_t, 256> index_{};
};

}  // namespace motifvote
