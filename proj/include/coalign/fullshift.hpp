#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coalign {

// Finite word over the alphabet {0, ..., size-1}.
using Word = std::vector<int>;

std::string show_word(const Word&, int alphabet_size);

// Table d: A^n -> A driving a sliding block code.  Words index the table
// with the first symbol most significant.
class BlockMap {
public:
    BlockMap(int alphabet_size, int window, std::vector<int> table);

    int alphabet_size() const { return alphabet_; }
    int window() const { return window_; }
    const std::vector<int>& table() const { return table_; }

    // d(w) for a word of length window().
    int apply(const Word& w) const;
    int apply_at(const Word& w, std::size_t offset) const;

    friend bool operator==(const BlockMap&, const BlockMap&) = default;

private:
    int alphabet_;
    int window_;
    std::vector<int> table_;
};

// tau_d(x)_i = d(x_i ... x_{i+n-1}); output length |x| - n + 1.
Word apply_code(const BlockMap&, const Word& x);

struct PermutiveResult {
    bool ok = true;
    Word failing_prefix;  // the (n-1)-context whose section is not a bijection
};
// Left permutive: a |-> d(a u) is a bijection of A for every context u.
PermutiveResult is_left_permutive(const BlockMap&);

// All x = a z with d(a z_1 ... z_{n-1}) = y_1.  Preconditions: |y| >= 2,
// |z| >= n, and shift(y) agrees with apply_code(z) on their (nonempty)
// common overlap.
std::vector<Word> star_lift_fullshift(const BlockMap&, const Word& y, const Word& z);

struct FullShiftStarResult {
    bool ok = true;
    std::int64_t instances = 0;
    Word y, z;                 // counterexample pair, set iff !ok
    std::vector<Word> lifts;   // its lifts (possibly empty or multiple)
};
// Exhausts all z of length len and all compatible y = y_1 tau_d(z);
// *-commutation at this window length means exactly one lift each.
FullShiftStarResult verify_star_commute_fullshift(const BlockMap&, int len);

// Named block maps used throughout the tests and the CLI.
BlockMap bar_map();                       // A={0,1}, n=1, 0<->1
BlockMap drop_first_map(int alphabet_size = 2);  // d(ab)=b: the shift itself
BlockMap four_letter_map();               // A={0,1,2,3}, n=2 table
BlockMap mod_sum_map(int n);              // A={0..n-1}, window n, sum mod n
std::vector<std::pair<std::string, BlockMap>> builtin_examples();
std::optional<BlockMap> find_builtin(const std::string& name);

BlockMap load_block_map(std::istream&);
BlockMap load_block_map_string(const std::string& text);
BlockMap load_block_map_file(const std::string& path);
std::string save_block_map(const BlockMap&);

}  // namespace coalign
