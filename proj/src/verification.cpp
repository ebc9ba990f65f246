#include "ladder/verification.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ladder/crystal.hpp"
#include "ladder/graph.hpp"
#include "ladder/io.hpp"
#include "ladder/jm.hpp"
#include "ladder/regularization.hpp"
#include "ladder/rim_hooks.hpp"

namespace ladder {

nlohmann::ordered_json VerificationReport::to_json() const
{
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["ell"] = ell;
    j["params"] = params;
    j["checks"] = checks;
    j["passed"] = passed();
    auto fs = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
        nlohmann::ordered_json fj;
        fj["input"] = f.input;
        if (f.residue >= 0) {
            fj["residue"] = f.residue;
        } else {
            fj["residue"] = nullptr;
        }
        fj["expected"] = f.expected;
        fj["actual"] = f.actual;
        fs.push_back(std::move(fj));
    }
    j["failures"] = std::move(fs);
    return j;
}

namespace {

using Pred = std::function<bool(const Partition&)>;

class Recorder {
public:
    explicit Recorder(VerificationReport& r) : r_(r) {}

    void check(bool ok, const std::string& input, int residue, const std::string& expected,
               const std::string& actual)
    {
        ++r_.checks;
        if (!ok) {
            r_.failures.push_back({input, residue, expected, actual});
        }
    }

    void check(bool ok, const Partition& input, int residue, const std::string& expected,
               const std::string& actual)
    {
        check(ok, to_string(input), residue, expected, actual);
    }

private:
    VerificationReport& r_;
};

std::string show(const std::optional<Partition>& p)
{
    return p ? to_string(*p) : "absent";
}

std::string show(bool b)
{
    return b ? "true" : "false";
}

std::vector<Partition> regular_partitions(int n, Modulus m)
{
    auto all = partitions_of(n);
    std::erase_if(all, [m](const Partition& p) { return !is_regular(p, m); });
    std::sort(all.begin(), all.end());
    return all;
}

VerificationReport make_report(const char* suite, Modulus m, const char* key, int value)
{
    VerificationReport r;
    r.suite = suite;
    r.ell = m.ell();
    r.params[key] = value;
    return r;
}

// f^phi and e^eps stay in the class; intermediate powers leave it.
void string_ends(Recorder& rec, const Partition& lambda, Modulus m, CrystalModel model, const Pred& in_class,
                 const std::string& name)
{
    for (int i = 0; i < m.ell(); ++i) {
        const Residue res{i};
        const int ph = phi(lambda, res, m, model);
        Partition cur = lambda;
        for (int k = 1; k <= ph; ++k) {
            auto next = apply_f(cur, res, m, model);
            if (!next) {
                rec.check(false, lambda, i, "f^" + std::to_string(k) + " defined", "absent");
                break;
            }
            cur = *next;
            if (k < ph - 1) {
                rec.check(!in_class(cur), lambda, i, "f^" + std::to_string(k) + " not " + name, to_string(cur));
            }
        }
        rec.check(in_class(cur), lambda, i, "f^phi is " + name, to_string(cur));

        const int ep = epsilon(lambda, res, m, model);
        cur = lambda;
        for (int k = 1; k <= ep; ++k) {
            auto next = apply_e(cur, res, m, model);
            if (!next) {
                rec.check(false, lambda, i, "e^" + std::to_string(k) + " defined", "absent");
                break;
            }
            cur = *next;
            if (k > 1 && k < ep) {
                rec.check(!in_class(cur), lambda, i, "e^" + std::to_string(k) + " not " + name, to_string(cur));
            }
        }
        rec.check(in_class(cur), lambda, i, "e^eps is " + name, to_string(cur));
    }
}

} // namespace

VerificationReport verify_isomorphism(Modulus m, int depth)
{
    auto report = make_report("isomorphism", m, "depth", depth);
    Recorder rec(report);
    const auto g = build_crystal(m, depth, CrystalModel::Ladder);
    for (const auto& level : g.levels) {
        for (const auto& lambda : level) {
            const auto reg = regularize(lambda, m);
            for (int i = 0; i < m.ell(); ++i) {
                const Residue res{i};
                auto fh = f_hat(lambda, res, m);
                auto ft = f_tilde(reg, res, m);
                std::optional<Partition> rf = fh ? std::optional(regularize(*fh, m)) : std::nullopt;
                rec.check(rf == ft, lambda, i, "R f^ = f~ R: " + show(ft), show(rf));

                auto eh = e_hat(lambda, res, m);
                auto et = e_tilde(reg, res, m);
                std::optional<Partition> re = eh ? std::optional(regularize(*eh, m)) : std::nullopt;
                rec.check(re == et, lambda, i, "R e^ = e~ R: " + show(et), show(re));

                int p1 = phi_hat(lambda, res, m);
                int p2 = phi(reg, res, m);
                rec.check(p1 == p2, lambda, i, "phi=" + std::to_string(p2), "phi^=" + std::to_string(p1));
                int e1 = epsilon_hat(lambda, res, m);
                int e2 = epsilon(reg, res, m);
                rec.check(e1 == e2, lambda, i, "eps=" + std::to_string(e2), "eps^=" + std::to_string(e1));
            }
        }
    }
    return report;
}

VerificationReport crystal_structure_suite(Modulus m, int depth)
{
    auto report = make_report("crystal-structure", m, "depth", depth);
    Recorder rec(report);
    const auto classical = build_crystal(m, depth, CrystalModel::Classical);
    const auto ladder = build_crystal(m, depth, CrystalModel::Ladder);

    for (int n = 0; n <= depth; ++n) {
        const auto regular = regular_partitions(n, m);
        const auto& cl = classical.levels[static_cast<std::size_t>(n)];
        const auto& ld = ladder.levels[static_cast<std::size_t>(n)];
        const std::string level = "level " + std::to_string(n);
        rec.check(cl.size() == regular.size(), level, -1, std::to_string(regular.size()) + " classical nodes",
                  std::to_string(cl.size()));
        rec.check(ld.size() == regular.size(), level, -1, std::to_string(regular.size()) + " ladder nodes",
                  std::to_string(ld.size()));
        rec.check(cl == regular, level, -1, "classical nodes = regular partitions", "differs");

        std::set<Partition> lowered;
        for (const auto& mu : regular) {
            lowered.insert(deregularize(mu, m));
        }
        rec.check(std::vector<Partition>(lowered.begin(), lowered.end()) == ld, level, -1,
                  "ladder nodes = S(regular partitions)", "differs");
        for (const auto& lambda : ld) {
            rec.check(is_ladder_node(lambda, m), lambda, -1, "ladder node", "no");
        }

        const std::set<Partition> ld_set(ld.begin(), ld.end());
        const std::set<Partition> cl_set(cl.begin(), cl.end());
        for (const auto& lambda : partitions_of(n)) {
            if (is_core(lambda, m)) {
                rec.check(ld_set.contains(lambda) && cl_set.contains(lambda), lambda, -1, "core is a node in both",
                          "missing");
            }
            if (m.ell() >= 3 && is_jm(lambda, m)) {
                rec.check(ld_set.contains(lambda), lambda, -1, "JM partition is a ladder node", "missing");
            }
        }
    }

    for (const auto* g : {&classical, &ladder}) {
        for (const auto& e : g->edges) {
            auto back = apply_e(e.target, e.residue, m, g->model);
            rec.check(back == e.source, e.source, e.residue.value,
                      std::string(to_string(g->model)) + " e f = id: " + to_string(e.source), show(back));
            bool one_box = e.target.size() == e.source.size() + 1;
            rec.check(one_box, e.source, e.residue.value, "edge adds one box", to_string(e.target));
        }
    }
    return report;
}

VerificationReport theorem_suite(Modulus m, int nmax)
{
    auto report = make_report("theorems", m, "nmax", nmax);
    Recorder rec(report);
    const Pred ell_part = [m](const Partition& p) { return is_ell_partition(p, m); };
    const Pred jm = [m](const Partition& p) { return is_jm(p, m); };
    const Pred weak = [m](const Partition& p) { return is_regular(p, m) && is_weak_ell_partition(p, m); };

    for (int n = 0; n <= nmax; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const bool regular = is_regular(lambda, m);
            if (ell_part(lambda)) {
                string_ends(rec, lambda, m, CrystalModel::Classical, ell_part, "ell-partition");
            }
            const bool is_jm_part = jm(lambda);
            if (is_jm_part) {
                string_ends(rec, lambda, m, CrystalModel::Ladder, jm, "JM");
                rec.check(is_ladder_node(lambda, m), lambda, -1, "JM partition is a ladder node", "not a node");
            }
            if (regular && weak(lambda)) {
                string_ends(rec, lambda, m, CrystalModel::Classical, weak, "weak ell-partition");
            }
            if (is_L_partition(lambda, m)) {
                rec.check(is_ladder_node(lambda, m), lambda, -1, "L-partition is a ladder node", "not a node");
                auto lhs = mullineux(regularize(lambda, m), m);
                auto rhs = regularize(transpose(lambda), m);
                rec.check(lhs == rhs, lambda, -1, "m(R l) = R(l'): " + to_string(rhs), to_string(lhs));
            }
        }
    }
    return report;
}

VerificationReport regularization_suite(Modulus m, int nmax)
{
    auto report = make_report("regularization", m, "nmax", nmax);
    Recorder rec(report);
    for (int n = 0; n <= nmax; ++n) {
        std::map<std::map<int, int>, std::vector<Partition>> classes;
        for (auto& p : partitions_of(n)) {
            auto key = ladder_counts(p, m);
            classes[key].push_back(std::move(p));
        }
        for (const auto& [counts, members] : classes) {
            int regular_members = 0;
            int locked_members = 0;
            for (const auto& p : members) {
                regular_members += is_regular(p, m) ? 1 : 0;
                locked_members += lock_labels(p, m).all_locked() ? 1 : 0;
            }
            const auto& first = members.front();
            rec.check(regular_members == 1, first, -1, "one regular member", std::to_string(regular_members));
            rec.check(locked_members == 1, first, -1, "one all-locked member", std::to_string(locked_members));

            for (const auto& lambda : members) {
                const auto reg = regularize(lambda, m);
                const auto der = deregularize(lambda, m);
                rec.check(is_regular(reg, m), lambda, -1, "R is regular", to_string(reg));
                rec.check(ladder_counts(reg, m) == counts, lambda, -1, "R keeps ladder counts", to_string(reg));
                rec.check(ladder_counts(der, m) == counts, lambda, -1, "S keeps ladder counts", to_string(der));
                rec.check(regularize(reg, m) == reg, lambda, -1, "R idempotent", to_string(reg));
                rec.check(deregularize(der, m) == der, lambda, -1, "S idempotent", to_string(der));
                rec.check(regularize(der, m) == reg, lambda, -1, "R S = R", to_string(regularize(der, m)));
                rec.check(deregularize(reg, m) == der, lambda, -1, "S R = S", to_string(deregularize(reg, m)));
                rec.check(lock_labels(der, m).all_locked(), lambda, -1, "S-image all locked", to_string(der));
                rec.check(is_ladder_node(der, m), lambda, -1, "S-image is a ladder node", to_string(der));
                for (const auto& mu : members) {
                    auto top = dominance_compare(reg, mu);
                    rec.check(top == Dominance::Greater || top == Dominance::Equal, lambda, -1,
                              "R dominates " + to_string(mu), to_string(reg));
                    auto bottom = dominance_compare(der, mu);
                    rec.check(bottom == Dominance::Less || bottom == Dominance::Equal, lambda, -1,
                              "S dominated by " + to_string(mu), to_string(der));
                }
            }
        }
    }
    return report;
}

VerificationReport mullineux_suite(Modulus m, int nmax)
{
    auto report = make_report("mullineux", m, "nmax", nmax);
    Recorder rec(report);
    const int e = m.ell();
    for (int n = 0; n <= nmax; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            if (is_regular(lambda, m)) {
                const auto img = mullineux(lambda, m, ResidueChoice::Smallest);
                const auto alt = mullineux(lambda, m, ResidueChoice::Largest);
                rec.check(img.size() == lambda.size(), lambda, -1, "size preserved", to_string(img));
                rec.check(is_regular(img, m), lambda, -1, "image regular", to_string(img));
                rec.check(img == alt, lambda, -1, "choice independent: " + to_string(img), to_string(alt));
                const auto back = mullineux(img, m);
                rec.check(back == lambda, lambda, -1, "involution", to_string(back));
                for (int i = 0; i < e; ++i) {
                    int a = epsilon(lambda, Residue{i}, m);
                    int b = epsilon(img, Residue{(e - i) % e}, m);
                    rec.check(a == b, lambda, i, "eps_i = eps_-i(m): " + std::to_string(a), std::to_string(b));
                }
            }
            // the identity holds exactly on L-partitions
            const bool lpart = is_L_partition(lambda, m);
            auto lhs = mullineux(regularize(lambda, m), m);
            auto rhs = regularize(transpose(lambda), m);
            rec.check((lhs == rhs) == lpart, lambda, -1,
                      std::string(lpart ? "" : "not ") + "m(R l) = R(l'): " + to_string(rhs), to_string(lhs));
        }
    }
    return report;
}

VerificationReport equivalence_suite(Modulus m, int nmax)
{
    auto report = make_report("equivalences", m, "nmax", nmax);
    Recorder rec(report);
    for (int n = 0; n <= nmax; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const bool a = is_jm(lambda, m);
            const bool b = is_generalized_ell_partition(lambda, m);
            rec.check(a == b, lambda, -1, "generalized ell-partition " + show(b), "JM " + show(a));

            const bool c = is_ell_partition(lambda, m);
            const bool d = is_regular(lambda, m) && star_condition(lambda, m);
            rec.check(c == d, lambda, -1, "regular and star " + show(d), "ell-partition " + show(c));

            const bool l1 = is_L_partition(lambda, m);
            const bool l2 = is_L_partition_lyle(lambda, m);
            rec.check(l1 == l2, lambda, -1, "hook/ell form " + show(l2), "arm/leg form " + show(l1));

            const bool n1 = is_ladder_node(lambda, m);
            const bool n2 = lock_labels(lambda, m).all_locked();
            const bool n3 = deregularize(lambda, m) == lambda;
            rec.check(n1 == n2 && n2 == n3, lambda, -1, "agreement",
                      "h=ell*arm " + show(n1) + ", locked " + show(n2) + ", fixed " + show(n3));
        }
    }
    return report;
}

} // namespace ladder
