#include "mvlf/alphabet.hpp"

#include <cctype>
#include <utility>

namespace mvlf {

namespace {

bool has_whitespace(std::string_view s) {
  for (unsigned char c : s) {
    if (std::isspace(c)) return true;
  }
  return false;
}

}  // namespace

alphabet::alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2) {
    throw invalid_alphabet("an alphabet needs at least 2 symbols, got " +
                           std::to_string(symbols_.size()));
  }
  index_.reserve(symbols_.size());
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const std::string& s = symbols_[i];
    if (s.empty()) {
      throw invalid_alphabet("symbol " + std::to_string(i) + " is empty");
    }
    if (has_whitespace(s)) {
      throw invalid_alphabet("symbol '" + s + "' contains whitespace");
    }
    auto [it, inserted] = index_.emplace(s, static_cast<value_index>(i));
    if (!inserted) {
      throw invalid_alphabet("duplicate symbol '" + s + "'");
    }
  }
}

const std::string& alphabet::symbol(value_index index) const {
  if (index >= symbols_.size()) {
    throw invalid_digit("value-index " + std::to_string(index) + " is out of range for radix " +
                        std::to_string(symbols_.size()));
  }
  return symbols_[index];
}

value_index alphabet::index_of(std::string_view symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) {
    throw unknown_symbol("symbol '" + std::string(symbol) + "' is not in the alphabet");
  }
  return it->second;
}

bool alphabet::contains(std::string_view symbol) const {
  return index_.find(symbol) != index_.end();
}

}  // namespace mvlf
