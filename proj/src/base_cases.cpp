#include "ocycle/base_cases.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ocycle/labels.hpp"

namespace ocycle {

namespace detail {
// defined in the generated base_case_assets.cpp
const char* embedded_listing(int v);
const char* embedded_errata_json();
}  // namespace detail

namespace {

struct RawToken {
    std::string text;
    int row = 0;    // 1-based display row
    int col = 0;    // 1-based cell column, 0 for sequence listings
    int index = 0;  // 1-based position inside the cell / row
};

struct RawListing {
    bool grid = false;
    // grid: cells[r][c] = 3 tokens; sequence: rows[r] = token list
    std::vector<std::vector<std::vector<RawToken>>> cells;
    std::vector<std::vector<RawToken>> seq_rows;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

RawListing tokenize_listing(const std::string& text) {
    RawListing raw;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        rows.push_back(t);
        if (t.find('|') != std::string::npos) raw.grid = true;
    }

    int r = 0;
    for (const std::string& rowtext : rows) {
        ++r;
        if (raw.grid) {
            std::vector<std::vector<RawToken>> rowcells;
            int c = 0;
            for (const std::string& cell : split(rowtext, '|')) {
                std::string body = trim(cell);
                if (body.empty()) continue;
                ++c;
                std::vector<RawToken> toks;
                if (body.find(',') != std::string::npos) {
                    int k = 0;
                    for (const std::string& tk : split(body, ',')) {
                        std::string tt = trim(tk);
                        if (tt.empty())
                            throw std::invalid_argument("listing row " + std::to_string(r) +
                                                        " col " + std::to_string(c) +
                                                        ": empty token");
                        toks.push_back({tt, r, c, ++k});
                    }
                } else {
                    // compact form: one point per character (hex digits)
                    int k = 0;
                    for (char ch : body) toks.push_back({std::string(1, ch), r, c, ++k});
                }
                if (toks.size() != 3)
                    throw std::invalid_argument("listing row " + std::to_string(r) + " col " +
                                                std::to_string(c) + ": cell '" + body +
                                                "' does not hold exactly 3 points");
                rowcells.push_back(std::move(toks));
            }
            raw.cells.push_back(std::move(rowcells));
        } else {
            std::vector<RawToken> toks;
            std::istringstream ls(rowtext);
            std::string tk;
            int k = 0;
            while (ls >> tk) toks.push_back({tk, r, 0, ++k});
            raw.seq_rows.push_back(std::move(toks));
        }
    }
    return raw;
}

void apply_errata(RawListing& raw, int v, const std::vector<ErrataEntry>& errata) {
    for (const ErrataEntry& e : errata) {
        if (e.v != v) continue;
        RawToken* tok = nullptr;
        if (raw.grid) {
            if (e.row >= 1 && e.row <= static_cast<int>(raw.cells.size())) {
                auto& rowcells = raw.cells[e.row - 1];
                if (e.col >= 1 && e.col <= static_cast<int>(rowcells.size()) && e.token >= 1 &&
                    e.token <= 3)
                    tok = &rowcells[e.col - 1][e.token - 1];
            }
        } else {
            if (e.row >= 1 && e.row <= static_cast<int>(raw.seq_rows.size())) {
                auto& rowtoks = raw.seq_rows[e.row - 1];
                if (e.token >= 1 && e.token <= static_cast<int>(rowtoks.size()))
                    tok = &rowtoks[e.token - 1];
            }
        }
        if (!tok)
            throw std::invalid_argument("erratum for v=" + std::to_string(e.v) +
                                        " points at a nonexistent token (row " +
                                        std::to_string(e.row) + ", col " + std::to_string(e.col) +
                                        ", token " + std::to_string(e.token) + ")");
        if (tok->text != e.original)
            throw std::invalid_argument("erratum for v=" + std::to_string(e.v) + " expects '" +
                                        e.original + "' at row " + std::to_string(e.row) +
                                        " col " + std::to_string(e.col) + " token " +
                                        std::to_string(e.token) + ", found '" + tok->text + "'");
        tok->text = e.corrected;
    }
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

// Token -> label translation.  Pair notation is in effect iff any infinity
// token appears; otherwise tokens are plain integers (single hex chars in
// compact cells), normalized from 1-based to 0-based when the labels are
// exactly 1..v.
struct TokenMapper {
    bool pair_mode = false;
    bool one_based = false;
    int v = 0;
    int m = 0;  // residue modulus in pair mode

    static int hex_value(char ch) {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        return -1;
    }

    // returns (kind, coset/index, residue) with kind 0=int, 1=pair, 2=inf
    static std::tuple<int, int, int> classify(const RawToken& t) {
        const std::string& s = t.text;
        if (s.rfind("inf", 0) == 0) {
            std::string idx = s.substr(3);
            if (idx.empty()) return {2, 0, 0};
            if (!is_integer(idx)) throw std::invalid_argument("bad infinity token '" + s + "'");
            return {2, std::stoi(idx), 0};
        }
        size_t paren = s.find('(');
        if (paren != std::string::npos) {
            // c(x) pair token
            if (s.back() != ')' || paren == 0)
                throw std::invalid_argument("bad pair token '" + s + "'");
            std::string c = s.substr(0, paren);
            std::string x = s.substr(paren + 1, s.size() - paren - 2);
            if (!is_integer(c) || !is_integer(x))
                throw std::invalid_argument("bad pair token '" + s + "'");
            return {1, std::stoi(c), std::stoi(x)};
        }
        if (s.size() == 1 && hex_value(s[0]) >= 0 && !std::isdigit(static_cast<unsigned char>(s[0])))
            return {0, hex_value(s[0]), 0};
        if (is_integer(s)) return {0, std::stoi(s), 0};
        throw std::invalid_argument("unrecognized point token '" + s + "'");
    }

    int label(const RawToken& t) const {
        auto [kind, a, b] = classify(t);
        if (pair_mode) {
            if (kind == 2) {
                if (a < 0 || 2 * m + a >= v)
                    throw std::invalid_argument("infinity index out of range in '" + t.text + "'");
                return 2 * m + a;
            }
            int coset, residue;
            if (kind == 1) {
                coset = a;
                residue = b;
            } else {
                // two-digit shorthand cx: first digit coset, rest residue
                if (t.text.size() < 2)
                    throw std::invalid_argument("pair token too short: '" + t.text + "'");
                coset = t.text[0] - '0';
                residue = std::stoi(t.text.substr(1));
            }
            if (coset < 0 || coset > 1 || residue < 0 || residue >= m)
                throw std::invalid_argument("pair token '" + t.text + "' outside (Z_2 x Z_" +
                                            std::to_string(m) + ")");
            return coset * m + residue;
        }
        if (kind != 0)
            throw std::invalid_argument("pair token '" + t.text + "' in an integer listing");
        int x = a - (one_based ? 1 : 0);
        if (x < 0 || x >= v)
            throw std::invalid_argument("point '" + t.text + "' outside [0," + std::to_string(v) +
                                        ")");
        return x;
    }
};

TokenMapper make_mapper(const RawListing& raw, int v) {
    TokenMapper mp;
    mp.v = v;
    std::set<int> inf_indices;
    bool any_pair_paren = false;
    int min_int = INT32_MAX, max_int = INT32_MIN;

    auto scan = [&](const RawToken& t) {
        auto [kind, a, b] = TokenMapper::classify(t);
        if (kind == 2) inf_indices.insert(a);
        if (kind == 1) any_pair_paren = true;
        if (kind == 0) {
            min_int = std::min(min_int, a);
            max_int = std::max(max_int, a);
        }
        (void)b;
    };
    for (const auto& row : raw.cells)
        for (const auto& cell : row)
            for (const auto& t : cell) scan(t);
    for (const auto& row : raw.seq_rows)
        for (const auto& t : row) scan(t);

    if (!inf_indices.empty() || any_pair_paren) {
        mp.pair_mode = true;
        int n_inf = static_cast<int>(inf_indices.size());
        if (n_inf == 0 || (v - n_inf) % 2 != 0 || v - n_inf <= 0)
            throw std::invalid_argument("listing for v=" + std::to_string(v) + " has " +
                                        std::to_string(n_inf) +
                                        " infinity points; cannot infer residue modulus");
        mp.m = (v - n_inf) / 2;
    } else {
        mp.one_based = (min_int == 1 && max_int == v);
    }
    return mp;
}

std::vector<OrientedBlock> blocks_from_raw(const RawListing& raw, int v) {
    TokenMapper mp = make_mapper(raw, v);
    std::vector<OrientedBlock> blocks;

    auto push_block = [&](int a, int b, int c) {
        if (a == b || a == c || b == c)
            throw std::invalid_argument("listing block with repeated point: {" +
                                        std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(c) + "}");
        blocks.push_back({a, b, c});
    };

    if (raw.grid) {
        size_t maxcols = 0;
        for (const auto& row : raw.cells) maxcols = std::max(maxcols, row.size());
        for (size_t c = 0; c < maxcols; ++c) {
            for (const auto& row : raw.cells) {
                if (c >= row.size()) continue;
                const auto& cell = row[c];
                push_block(mp.label(cell[0]), mp.label(cell[1]), mp.label(cell[2]));
            }
        }
    } else {
        // join rows, dropping the repeated junction point at each row break
        std::vector<int> seq;
        for (const auto& row : raw.seq_rows) {
            size_t start = 0;
            if (!seq.empty() && !row.empty() && mp.label(row[0]) == seq.back()) start = 1;
            for (size_t i = start; i < row.size(); ++i) seq.push_back(mp.label(row[i]));
        }
        if (seq.size() < 3 || seq.size() % 2 == 0)
            throw std::invalid_argument("sequence listing must hold 2b+1 points, got " +
                                        std::to_string(seq.size()));
        if (seq.front() != seq.back())
            throw std::invalid_argument(
                "sequence listing must close on its opening overlap point");
        for (size_t i = 0; i + 2 < seq.size(); i += 2)
            push_block(seq[i], seq[i + 1], seq[i + 2]);
    }
    return blocks;
}

}  // namespace

std::vector<OrientedBlock> parse_appendix_listing(const std::string& text, int v) {
    return parse_appendix_listing(text, v, {});
}

std::vector<OrientedBlock> parse_appendix_listing(const std::string& text, int v,
                                                  const std::vector<ErrataEntry>& errata) {
    RawListing raw = tokenize_listing(text);
    apply_errata(raw, v, errata);
    return blocks_from_raw(raw, v);
}

std::vector<ErrataEntry> parse_errata_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::vector<ErrataEntry> out;
    for (const auto& e : j.at("entries")) {
        ErrataEntry en;
        en.v = e.at("v").get<int>();
        en.row = e.at("row").get<int>();
        en.col = e.value("col", 0);
        en.token = e.at("token").get<int>();
        en.original = e.at("original").get<std::string>();
        en.corrected = e.at("corrected").get<std::string>();
        en.defect = e.value("defect", "");
        en.reason = e.value("reason", "");
        out.push_back(std::move(en));
    }
    return out;
}

const std::vector<int>& base_case_orders() {
    static const std::vector<int> orders = {7, 9, 13, 15, 19, 21, 25, 27, 33};
    return orders;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string listing_text(int v) {
    const char* dir = std::getenv("OCYCLE_DATA_DIR");
    if (dir && *dir) {
        char name[16];
        std::snprintf(name, sizeof(name), "v%02d.txt", v);
        return read_file(std::string(dir) + "/" + name);
    }
    const char* s = detail::embedded_listing(v);
    if (!s) throw std::invalid_argument("no embedded listing for v=" + std::to_string(v));
    return s;
}

std::string errata_text() {
    const char* dir = std::getenv("OCYCLE_DATA_DIR");
    if (dir && *dir) return read_file(std::string(dir) + "/errata.json");
    return detail::embedded_errata_json();
}

BaseCaseAsset build_asset(int v) {
    std::string text = listing_text(v);
    std::vector<ErrataEntry> all_errata = parse_errata_json(errata_text());
    std::vector<ErrataEntry> mine;
    for (const auto& e : all_errata)
        if (e.v == v) mine.push_back(e);

    std::vector<OrientedBlock> obs = parse_appendix_listing(text, v, mine);
    std::vector<Triple> triples;
    triples.reserve(obs.size());
    for (const auto& ob : obs) triples.push_back(ob.triple());

    TripleSystem sts = TripleSystem::make(v, std::move(triples));  // throws on a bad listing
    OverlapCycle cyc{obs};
    OcycleReport rep = validate_ocycle(sts, cyc);
    if (!rep.clean()) {
        throw std::runtime_error("base case v=" + std::to_string(v) +
                                 ": listing is not a valid 1-ocycle\n" + rep.to_string());
    }
    return BaseCaseAsset{v, std::move(text), std::move(obs), std::move(sts), std::move(cyc),
                         std::move(mine)};
}

}  // namespace

const BaseCaseAsset& base_case(int v) {
    const auto& orders = base_case_orders();
    if (std::find(orders.begin(), orders.end(), v) == orders.end())
        throw std::invalid_argument("no base case for order " + std::to_string(v) +
                                    "; supported: 7, 9, 13, 15, 19, 21, 25, 27, 33");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<BaseCaseAsset>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(v);
    if (it == cache.end())
        it = cache.emplace(v, std::make_unique<BaseCaseAsset>(build_asset(v))).first;
    return *it->second;
}

Fano7Seed fano7_standard() { return Fano7Seed{base_case(7).sts}; }

}  // namespace ocycle
