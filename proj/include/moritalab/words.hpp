#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace moritalab {

// Lexicographic indexing of words over a finite alphabet, first symbol
// most significant. One canonical index is used everywhere (local-function
// tables, transfer-operator states) so tables never disagree across modules.
struct WordSpace {
    int alphabet = 2;
    int length = 1;

    std::size_t size() const {
        std::size_t n = 1;
        for (int i = 0; i < length; ++i) {
            if (n > (std::size_t(1) << 40) / std::size_t(alphabet))
                throw std::invalid_argument("WordSpace: alphabet^length too large");
            n *= std::size_t(alphabet);
        }
        return n;
    }

    void decode(std::size_t index, std::vector<int>& symbols) const {
        symbols.assign(std::size_t(length), 0);
        for (int i = length - 1; i >= 0; --i) {
            symbols[std::size_t(i)] = int(index % std::size_t(alphabet));
            index /= std::size_t(alphabet);
        }
    }

    std::size_t encode(const std::vector<int>& symbols) const {
        std::size_t idx = 0;
        for (int i = 0; i < length; ++i) idx = idx * std::size_t(alphabet) + std::size_t(symbols[std::size_t(i)]);
        return idx;
    }

    // Drop the oldest symbol, append `sym`: the de Bruijn shift on words.
    std::size_t shift_append(std::size_t index, int sym) const {
        std::size_t mod = size() / std::size_t(alphabet);
        return (index % mod) * std::size_t(alphabet) + std::size_t(sym);
    }
};

} // namespace moritalab
