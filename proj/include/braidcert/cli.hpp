// include/braidcert/cli.hpp — command-line front end.
//
// Every command reads braid words as whitespace-separated signed decimal
// integers ("1 -2 1"; the empty string is the identity) and exits 0 on
// success, 1 on domain errors (message on stderr), 2 on usage errors.
// --json switches a command to machine-readable output with fixed key order.

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "braidcert/certify.hpp"
#include "braidcert/word_problem.hpp"

namespace braidcert::cli {

namespace detail {

using json = nlohmann::ordered_json;

inline std::vector<int> tokenize_letters(const std::string& text) {
    std::vector<int> letters;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        int g = 0;
        try {
            g = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw error("malformed token '" + tok + "'");
        }
        if (pos != tok.size()) throw error("malformed token '" + tok + "'");
        letters.push_back(g);
    }
    return letters;
}

inline std::vector<long long> csv_integers(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != tok.size()) throw error(std::string(what) + ": malformed value '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

inline std::vector<int> csv_sizes(const std::string& text) {
    std::vector<int> sizes;
    for (long long v : csv_integers(text, "--sizes")) sizes.push_back(static_cast<int>(v));
    return sizes;
}

inline json word_json(const BraidWord& w) {
    return json{{"n", w.strand_count}, {"word", w.letters}};
}

inline void print_word(std::ostream& out, const BraidWord& w, bool as_json) {
    if (as_json)
        out << word_json(w).dump() << '\n';
    else
        out << to_string(w) << '\n';
}

inline std::vector<Candidate> load_candidates(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw error("cannot open candidate file '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw error("candidate file '" + path + "': " + e.what());
    }
    const nlohmann::json* list = &doc;
    if (doc.is_object() && doc.contains("candidates")) list = &doc.at("candidates");
    if (!list->is_array()) throw error("candidate file must hold an array of {label, word}");
    std::vector<Candidate> out;
    for (const auto& item : *list) {
        Candidate c;
        c.label = item.at("label").get<std::string>();
        c.word = make_word(n, item.at("word").get<std::vector<int>>());
        out.push_back(std::move(c));
    }
    return out;
}

inline ExampleInstance build_from_flags(const std::string& variant, int m,
                                        const std::string& exps_csv,
                                        const std::string& powers_csv) {
    if (variant == "twist" || variant == "twist-odd") {
        if (exps_csv.empty()) throw CLI::RequiredError("--exps");
        std::vector<long long> exps = csv_integers(exps_csv, "--exps");
        return variant == "twist" ? build_twist_example(m, exps)
                                  : build_twist_example_odd(m, exps);
    }
    if (variant == "pa") {
        if (powers_csv.empty()) throw CLI::RequiredError("--powers");
        return build_pa_example(m, csv_integers(powers_csv, "--powers"));
    }
    throw error("unknown variant '" + variant + "'");
}

inline json example_json(const ExampleInstance& inst) {
    json j;
    j["variant"] = variant_name(inst.spec.variant);
    j["m"] = inst.spec.m;
    j["n"] = inst.structure.strand_count;
    j["sizes"] = inst.structure.sizes;
    j["params"] = inst.spec.params;
    j["beta"] = inst.beta.letters;
    return j;
}

inline void print_example(std::ostream& out, const ExampleInstance& inst, bool as_json) {
    if (as_json) {
        out << example_json(inst).dump() << '\n';
        return;
    }
    out << "n: " << inst.structure.strand_count << '\n';
    out << "sizes:";
    for (int s : inst.structure.sizes) out << ' ' << s;
    out << '\n';
    out << "beta: " << to_string(inst.beta) << '\n';
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using detail::json;

    CLI::App app{"exact braid-group computations and centralizer generator lower-bound "
                 "certificates"};
    app.name("braidcert");
    app.require_subcommand(1);

    // shared option storage
    int n = 0, size = 0, idx_i = 0, idx_j = 0, idx_k = 0, m = 0;
    std::string w1, w2, variant, out_path, cand_path;
    std::string sizes, exps, powers;  // comma-separated flags, parsed in the callbacks
    bool as_json = false;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "machine-readable output"); };

    // ---- wp: word problem ----
    CLI::App* wp = app.add_subcommand("wp", "word problem");
    wp->require_subcommand(1);

    CLI::App* wp_triv = wp->add_subcommand("is-trivial", "decide whether a word is the identity");
    wp_triv->add_option("--n", n, "strand count")->required();
    wp_triv->add_option("word", w1, "braid word")->required();
    add_json(wp_triv);
    wp_triv->callback([&] {
        bool t = is_identity(parse_word(w1, n));
        if (as_json)
            out << json{{"trivial", t}}.dump() << '\n';
        else
            out << (t ? "trivial" : "nontrivial") << '\n';
    });

    CLI::App* wp_eq = wp->add_subcommand("equal", "decide equality of two words");
    wp_eq->add_option("--n", n, "strand count")->required();
    wp_eq->add_option("word1", w1, "first braid word")->required();
    wp_eq->add_option("word2", w2, "second braid word")->required();
    add_json(wp_eq);
    wp_eq->callback([&] {
        bool e = equal(parse_word(w1, n), parse_word(w2, n));
        if (as_json)
            out << json{{"equal", e}}.dump() << '\n';
        else
            out << (e ? "equal" : "not equal") << '\n';
    });

    CLI::App* wp_comm = wp->add_subcommand("commutes", "decide whether two words commute");
    wp_comm->add_option("--n", n, "strand count")->required();
    wp_comm->add_option("word1", w1, "first braid word")->required();
    wp_comm->add_option("word2", w2, "second braid word")->required();
    add_json(wp_comm);
    wp_comm->callback([&] {
        bool c = commutes(parse_word(w1, n), parse_word(w2, n));
        if (as_json)
            out << json{{"commute", c}}.dump() << '\n';
        else
            out << (c ? "commute" : "do not commute") << '\n';
    });

    CLI::App* wp_nf = wp->add_subcommand("nf", "Garside left normal form");
    wp_nf->add_option("--n", n, "strand count")->required();
    wp_nf->add_option("word", w1, "braid word")->required();
    add_json(wp_nf);
    wp_nf->callback([&] {
        GarsideNormalForm nf = normal_form(parse_word(w1, n));
        if (as_json) {
            json factors = json::array();
            for (const auto& f : nf.factors) {
                std::vector<int> img;
                for (int s = 0; s < f.size(); ++s) img.push_back(f.image(s) + 1);
                factors.push_back(img);
            }
            out << json{{"inf", nf.inf}, {"factors", factors}}.dump() << '\n';
        } else {
            out << to_string(nf) << '\n';
        }
    });

    // ---- lk: linking matrix ----
    CLI::App* lk = app.add_subcommand("lk", "linking numbers of a pure braid");
    lk->add_option("--n", n, "strand count")->required();
    lk->add_option("word", w1, "pure braid word")->required();
    add_json(lk);
    lk->callback([&] {
        LinkingMatrix mat = linking_matrix(parse_word(w1, n));
        if (as_json) {
            json entries = json::array();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) entries.push_back({i, j, mat.at(i, j)});
            out << json{{"n", n}, {"entries", entries}}.dump() << '\n';
        } else {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    out << i << ' ' << j << ' ' << mat.at(i, j) << '\n';
        }
    });

    // ---- blocks ----
    CLI::App* cab = app.add_subcommand("cable", "replace strands by parallel bundles");
    cab->add_option("--size", size, "bundle size")->required();
    cab->add_option("--n", n, "strand count of the input word (default: inferred)");
    cab->add_option("word", w1, "braid word to cable")->required();
    add_json(cab);
    cab->callback([&] {
        std::vector<int> letters = detail::tokenize_letters(w1);
        int strands = n;
        if (strands == 0) {
            strands = 1;
            for (int g : letters) strands = std::max(strands, (g < 0 ? -g : g) + 1);
        }
        detail::print_word(out, cable(make_word(strands, letters), size), as_json);
    });

    CLI::App* bt = app.add_subcommand("block-twist", "full twist on one block");
    bt->add_option("--sizes", sizes, "block sizes, comma separated")->required();
    bt->add_option("--i", idx_i, "block index")->required();
    add_json(bt);
    bt->callback([&] { detail::print_word(out, block_twist(idx_i, make_blocks(detail::csv_sizes(sizes))), as_json); });

    CLI::App* bl = app.add_subcommand("block-linking", "linking element of two blocks");
    bl->add_option("--sizes", sizes, "block sizes, comma separated")->required();
    bl->add_option("--j", idx_j, "first block")->required();
    bl->add_option("--k", idx_k, "second block")->required();
    add_json(bl);
    bl->callback(
        [&] { detail::print_word(out, block_linking(idx_j, idx_k, make_blocks(detail::csv_sizes(sizes))), as_json); });

    CLI::App* prof = app.add_subcommand("profile", "block profile of a block-preserving word");
    prof->add_option("--sizes", sizes, "block sizes, comma separated")->required();
    prof->add_option("word", w1, "braid word")->required();
    add_json(prof);
    prof->callback([&] {
        BlockStructure B = make_blocks(detail::csv_sizes(sizes));
        BlockProfile p = block_profile(parse_word(w1, B.strand_count), B);
        if (as_json) {
            json cross = json::array();
            for (int j = 1; j <= p.block_count; ++j)
                for (int k = j + 1; k <= p.block_count; ++k) cross.push_back({j, k, p.cross(j, k)});
            out << json{{"internal", p.internal_counts}, {"cross", cross}}.dump() << '\n';
        } else {
            for (int i = 1; i <= p.block_count; ++i) out << "theta " << i << ' ' << p.internal(i) << '\n';
            for (int j = 1; j <= p.block_count; ++j)
                for (int k = j + 1; k <= p.block_count; ++k)
                    out << "x " << j << ' ' << k << ' ' << p.cross(j, k) << '\n';
        }
    });

    // ---- example builders ----
    CLI::App* ex = app.add_subcommand("example", "build a counterexample braid");
    ex->require_subcommand(1);
    auto add_example = [&](const std::string& name, const std::string& desc, bool pa) {
        CLI::App* cmd = ex->add_subcommand(name, desc);
        cmd->add_option("--m", m, "number of blocks")->required();
        if (pa)
            cmd->add_option("--powers", powers, "pairwise distinct powers")->required();
        else
            cmd->add_option("--exps", exps, "pairwise distinct twist exponents")->required();
        add_json(cmd);
        cmd->callback([&, name] {
            detail::print_example(out, detail::build_from_flags(name, m, exps, powers), as_json);
        });
        return cmd;
    };
    add_example("twist", "distinct block twist powers, n = 2m", false);
    add_example("twist-odd", "distinct block twist powers plus a free strand, n = 2m+1", false);
    add_example("pa", "distinct pseudo-Anosov powers, n = 3m", true);

    // ---- certify ----
    CLI::App* cert = app.add_subcommand("certify", "emit a generator lower-bound certificate");
    cert->add_option("--variant", variant, "twist | twist-odd | pa")->required();
    cert->add_option("--m", m, "number of blocks")->required();
    cert->add_option("--exps", exps, "twist exponents (twist, twist-odd)");
    cert->add_option("--powers", powers, "pseudo-Anosov powers (pa)");
    cert->add_option("--candidates", cand_path, "JSON file overriding the default candidate set");
    cert->add_option("--out", out_path, "also write the certificate to this file");
    add_json(cert);
    cert->callback([&] {
        ExampleInstance inst = detail::build_from_flags(variant, m, exps, powers);
        std::vector<Candidate> cands = cand_path.empty()
                                           ? default_candidate_set(inst)
                                           : detail::load_candidates(cand_path, inst.structure.strand_count);
        CertificateReport rep = lower_bound_certificate(inst, cands);
        std::string text = report_to_json(rep).dump(2) + "\n";
        out << text;
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw error("cannot write '" + out_path + "'");
            f << text;
        }
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace braidcert::cli
