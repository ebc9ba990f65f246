#include "ladder/crystal.hpp"

#include <algorithm>

namespace ladder {

std::string SignatureWord::signs() const
{
    std::string out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        out.push_back(e.sign == Sign::Plus ? '+' : '-');
    }
    return out;
}

int SignatureWord::count(Sign s) const
{
    return static_cast<int>(
        std::count_if(entries.begin(), entries.end(), [s](const SignatureEntry& e) { return e.sign == s; }));
}

namespace {

std::vector<SignatureEntry> signed_boxes(const Partition& lambda, Residue i, Modulus m)
{
    std::vector<SignatureEntry> out;
    for (const auto& b : addable_boxes(lambda, i, m)) {
        out.push_back({Sign::Plus, b});
    }
    for (const auto& b : removable_boxes(lambda, i, m)) {
        out.push_back({Sign::Minus, b});
    }
    return out;
}

std::optional<BoxPos> good_box(const SignatureWord& reduced)
{
    for (const auto& e : reduced.entries) {
        if (e.sign == Sign::Minus) {
            return e.box;
        }
    }
    return std::nullopt;
}

std::optional<BoxPos> cogood_box(const SignatureWord& reduced)
{
    for (auto it = reduced.entries.rbegin(); it != reduced.entries.rend(); ++it) {
        if (it->sign == Sign::Plus) {
            return it->box;
        }
    }
    return std::nullopt;
}

std::optional<Partition> add_cogood(const Partition& lambda, const SignatureWord& word)
{
    if (auto b = cogood_box(reduce(word))) {
        return add_box(lambda, *b);
    }
    return std::nullopt;
}

std::optional<Partition> remove_good(const Partition& lambda, const SignatureWord& word)
{
    if (auto b = good_box(reduce(word))) {
        return remove_box(lambda, *b);
    }
    return std::nullopt;
}

} // namespace

SignatureWord i_signature(const Partition& lambda, Residue i, Modulus m)
{
    SignatureWord w{signed_boxes(lambda, i, m), ReadingOrder::Classical};
    std::sort(w.entries.begin(), w.entries.end(),
              [](const SignatureEntry& a, const SignatureEntry& b) { return a.box.row > b.box.row; });
    // end-of-row positions in one row differ in residue, so rows are distinct
    for (std::size_t k = 1; k < w.entries.size(); ++k) {
        if (w.entries[k].box.row == w.entries[k - 1].box.row) {
            throw error(errc::internal, "two signed i-boxes share a row");
        }
    }
    return w;
}

SignatureWord ladder_i_signature(const Partition& lambda, Residue i, Modulus m)
{
    SignatureWord w{signed_boxes(lambda, i, m), ReadingOrder::Ladder};
    std::sort(w.entries.begin(), w.entries.end(), [m](const SignatureEntry& a, const SignatureEntry& b) {
        int la = ladder_index(a.box, m);
        int lb = ladder_index(b.box, m);
        return la != lb ? la < lb : a.box.row < b.box.row;
    });
    return w;
}

SignatureWord signature(const Partition& lambda, Residue i, Modulus m, CrystalModel model)
{
    return model == CrystalModel::Classical ? i_signature(lambda, i, m) : ladder_i_signature(lambda, i, m);
}

SignatureWord reduce(const SignatureWord& word)
{
    SignatureWord out{{}, word.order};
    for (const auto& e : word.entries) {
        if (e.sign == Sign::Plus && !out.entries.empty() && out.entries.back().sign == Sign::Minus) {
            out.entries.pop_back();
        } else {
            out.entries.push_back(e);
        }
    }
    return out;
}

int phi(const Partition& lambda, Residue i, Modulus m)
{
    return reduce(i_signature(lambda, i, m)).count(Sign::Plus);
}

int epsilon(const Partition& lambda, Residue i, Modulus m)
{
    return reduce(i_signature(lambda, i, m)).count(Sign::Minus);
}

int phi_hat(const Partition& lambda, Residue i, Modulus m)
{
    return reduce(ladder_i_signature(lambda, i, m)).count(Sign::Plus);
}

int epsilon_hat(const Partition& lambda, Residue i, Modulus m)
{
    return reduce(ladder_i_signature(lambda, i, m)).count(Sign::Minus);
}

std::optional<Partition> f_tilde(const Partition& lambda, Residue i, Modulus m)
{
    return add_cogood(lambda, i_signature(lambda, i, m));
}

std::optional<Partition> e_tilde(const Partition& lambda, Residue i, Modulus m)
{
    return remove_good(lambda, i_signature(lambda, i, m));
}

std::optional<Partition> f_hat(const Partition& lambda, Residue i, Modulus m)
{
    return add_cogood(lambda, ladder_i_signature(lambda, i, m));
}

std::optional<Partition> e_hat(const Partition& lambda, Residue i, Modulus m)
{
    return remove_good(lambda, ladder_i_signature(lambda, i, m));
}

int phi(const Partition& lambda, Residue i, Modulus m, CrystalModel model)
{
    return model == CrystalModel::Classical ? phi(lambda, i, m) : phi_hat(lambda, i, m);
}

int epsilon(const Partition& lambda, Residue i, Modulus m, CrystalModel model)
{
    return model == CrystalModel::Classical ? epsilon(lambda, i, m) : epsilon_hat(lambda, i, m);
}

std::optional<Partition> apply_f(const Partition& lambda, Residue i, Modulus m, CrystalModel model)
{
    return model == CrystalModel::Classical ? f_tilde(lambda, i, m) : f_hat(lambda, i, m);
}

std::optional<Partition> apply_e(const Partition& lambda, Residue i, Modulus m, CrystalModel model)
{
    return model == CrystalModel::Classical ? e_tilde(lambda, i, m) : e_hat(lambda, i, m);
}

std::optional<Partition> apply_f(const Partition& lambda, Residue i, Modulus m, CrystalModel model, int k)
{
    std::optional<Partition> cur = lambda;
    for (int step = 0; step < k && cur; ++step) {
        cur = apply_f(*cur, i, m, model);
    }
    return cur;
}

std::optional<Partition> apply_e(const Partition& lambda, Residue i, Modulus m, CrystalModel model, int k)
{
    std::optional<Partition> cur = lambda;
    for (int step = 0; step < k && cur; ++step) {
        cur = apply_e(*cur, i, m, model);
    }
    return cur;
}

char to_char(BoxType t) noexcept
{
    return static_cast<char>('a' + static_cast<int>(t));
}

namespace {

bool inside(const Partition& lambda, int r, int c)
{
    return r <= 0 || c <= 0 || lambda.contains({r, c});
}

// Types a-f; pos must be inside the (boundary-extended) diagram.
BoxType inner_type(const Partition& lambda, int r, int c)
{
    if (c == 0 && !inside(lambda, r, 1)) {
        return BoxType::f;
    }
    bool below = inside(lambda, r + 1, c);
    bool right = inside(lambda, r, c + 1);
    if (inside(lambda, r + 1, c + 1)) {
        return BoxType::a;
    }
    if (below && right) {
        return BoxType::b;
    }
    if (below) {
        return BoxType::c;
    }
    if (right) {
        return BoxType::d;
    }
    return BoxType::e;
}

} // namespace

BoxType box_type(const Partition& lambda, BoxPos pos)
{
    if (pos.row < 0 || pos.col < 0) {
        throw error(errc::box_not_in_diagram, "box types need non-negative coordinates");
    }
    if (inside(lambda, pos.row, pos.col)) {
        return inner_type(lambda, pos.row, pos.col);
    }
    int r = pos.row - 1;
    int c = pos.col - 1;
    if (!inside(lambda, r, c)) {
        return BoxType::k;
    }
    switch (inner_type(lambda, r, c)) {
    case BoxType::e: return BoxType::g;
    case BoxType::c: return BoxType::h;
    case BoxType::d: return BoxType::i;
    case BoxType::b: return BoxType::j;
    case BoxType::f: return BoxType::k;
    default: break;
    }
    // a type-a neighbour would put pos inside the diagram
    throw error(errc::internal, "unclassifiable position");
}

std::vector<int> residue_content(const Partition& lambda, Modulus m)
{
    std::vector<int> counts(static_cast<std::size_t>(m.ell()), 0);
    for (const auto& b : lambda.boxes()) {
        ++counts[static_cast<std::size_t>(residue(b, m).value)];
    }
    return counts;
}

} // namespace ladder
