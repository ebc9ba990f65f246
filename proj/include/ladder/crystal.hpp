#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ladder/partition.hpp"

namespace ladder {

enum class Sign { Plus, Minus };

struct SignatureEntry {
    Sign sign = Sign::Plus;
    BoxPos box;

    friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

enum class ReadingOrder {
    Classical, // strictly decreasing row
    Ladder,    // increasing ladder index, top to bottom within a ladder
};

struct SignatureWord {
    std::vector<SignatureEntry> entries;
    ReadingOrder order = ReadingOrder::Classical;

    // "+-+-" style rendering (ASCII minus).
    std::string signs() const;
    int count(Sign s) const;
};

// Which of the two operator families to use.
enum class CrystalModel { Classical, Ladder };

SignatureWord i_signature(const Partition& lambda, Residue i, Modulus m);
SignatureWord ladder_i_signature(const Partition& lambda, Residue i, Modulus m);
SignatureWord signature(const Partition& lambda, Residue i, Modulus m, CrystalModel model);

// Cancels adjacent "-+" pairs until the word has the form "+...+-...-".
SignatureWord reduce(const SignatureWord& word);

int phi(const Partition& lambda, Residue i, Modulus m);
int epsilon(const Partition& lambda, Residue i, Modulus m);
int phi_hat(const Partition& lambda, Residue i, Modulus m);
int epsilon_hat(const Partition& lambda, Residue i, Modulus m);

std::optional<Partition> f_tilde(const Partition& lambda, Residue i, Modulus m);
std::optional<Partition> e_tilde(const Partition& lambda, Residue i, Modulus m);
std::optional<Partition> f_hat(const Partition& lambda, Residue i, Modulus m);
std::optional<Partition> e_hat(const Partition& lambda, Residue i, Modulus m);

// Model-dispatching forms used by graph building and the suites.
int phi(const Partition& lambda, Residue i, Modulus m, CrystalModel model);
int epsilon(const Partition& lambda, Residue i, Modulus m, CrystalModel model);
std::optional<Partition> apply_f(const Partition& lambda, Residue i, Modulus m, CrystalModel model);
std::optional<Partition> apply_e(const Partition& lambda, Residue i, Modulus m, CrystalModel model);

// k-fold application; absent as soon as one step is absent.
std::optional<Partition> apply_f(const Partition& lambda, Residue i, Modulus m, CrystalModel model, int k);
std::optional<Partition> apply_e(const Partition& lambda, Residue i, Modulus m, CrystalModel model, int k);

enum class BoxType { a, b, c, d, e, f, g, h, i, j, k };

char to_char(BoxType t) noexcept;

// Position classification with row, col >= 0; positions with a
// non-positive coordinate count as inside the diagram.
BoxType box_type(const Partition& lambda, BoxPos pos);

// Number of boxes of each residue, indexed by residue value.
std::vector<int> residue_content(const Partition& lambda, Modulus m);

} // namespace ladder
