#include "ocycle/io.hpp"

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ocycle {

namespace {

struct LineReader {
    std::istringstream in;
    int line_no = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    // next content line (comments and blanks skipped); false at EOF
    bool next(std::string& out) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            size_t a = line.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            if (line[a] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }
};

std::vector<long long> parse_ints(const std::string& line, int line_no) {
    std::vector<long long> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        try {
            size_t pos = 0;
            long long val = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(val);
        } catch (...) {
            throw ParseError("line " + std::to_string(line_no) + ": bad integer token '" + tok +
                                 "'",
                             line_no);
        }
    }
    return out;
}

void expect_header(LineReader& r, const std::string& tag, long long& v, long long& b) {
    std::string line;
    if (!r.next(line)) throw ParseError("empty input, expected '" + tag + " v b' header", 0);
    std::istringstream is(line);
    std::string word;
    is >> word;
    if (word != tag)
        throw ParseError("line " + std::to_string(r.line_no) + ": expected '" + tag +
                             "' header, found '" + word + "'",
                         r.line_no);
    if (!(is >> v >> b))
        throw ParseError("line " + std::to_string(r.line_no) + ": expected '" + tag + " v b'",
                         r.line_no);
    std::string extra;
    if (is >> extra)
        throw ParseError("line " + std::to_string(r.line_no) + ": trailing token '" + extra + "'",
                         r.line_no);
}

}  // namespace

std::string write_sts_text(const TripleSystem& ts) {
    std::ostringstream os;
    os << "STS " << ts.order() << " " << ts.block_count() << "\n";
    for (const Triple& t : ts.blocks()) os << t.p[0] << " " << t.p[1] << " " << t.p[2] << "\n";
    return os.str();
}

TripleSystem read_sts_text(const std::string& text) {
    LineReader r(text);
    long long v = 0, b = 0;
    expect_header(r, "STS", v, b);
    if (v < 0 || b < 0 || b > 10'000'000)
        throw ParseError("line " + std::to_string(r.line_no) + ": implausible header values",
                         r.line_no);
    std::vector<Triple> blocks;
    blocks.reserve(b);
    std::string line;
    while (blocks.size() < static_cast<size_t>(b)) {
        if (!r.next(line))
            throw ParseError("unexpected end of input: " + std::to_string(blocks.size()) + " of " +
                                 std::to_string(b) + " blocks read",
                             r.line_no);
        std::vector<long long> xs = parse_ints(line, r.line_no);
        if (xs.size() != 3)
            throw ParseError("line " + std::to_string(r.line_no) + ": expected 3 labels, found " +
                                 std::to_string(xs.size()),
                             r.line_no);
        try {
            blocks.emplace_back(static_cast<int>(xs[0]), static_cast<int>(xs[1]),
                                static_cast<int>(xs[2]));
        } catch (const std::invalid_argument& e) {
            throw ParseError("line " + std::to_string(r.line_no) + ": " + e.what(), r.line_no);
        }
    }
    if (r.next(line))
        throw ParseError("line " + std::to_string(r.line_no) + ": trailing content after " +
                             std::to_string(b) + " blocks",
                         r.line_no);
    return TripleSystem::make(static_cast<int>(v), std::move(blocks));
}

std::string write_ocycle_text(int v, const OverlapCycle& c) {
    OverlapCycle canon = canonical_rotation(c);
    std::ostringstream os;
    os << "OCYCLE " << v << " " << canon.size() << "\n";
    for (const OrientedBlock& b : canon.blocks)
        os << b.head << " " << b.hidden << " " << b.tail << "\n";
    return os.str();
}

OverlapCycle read_ocycle_text(const std::string& text, int* v_out) {
    LineReader r(text);
    long long v = 0, b = 0;
    expect_header(r, "OCYCLE", v, b);
    if (v_out) *v_out = static_cast<int>(v);
    OverlapCycle c;
    c.blocks.reserve(b);
    std::string line;
    for (long long i = 0; i < b; ++i) {
        if (!r.next(line))
            throw ParseError("unexpected end of input: " + std::to_string(i) + " of " +
                                 std::to_string(b) + " blocks read",
                             r.line_no);
        std::vector<long long> xs = parse_ints(line, r.line_no);
        if (xs.size() != 3)
            throw ParseError("line " + std::to_string(r.line_no) +
                                 ": expected 'head hidden tail', found " +
                                 std::to_string(xs.size()) + " tokens",
                             r.line_no);
        c.blocks.push_back({static_cast<int>(xs[0]), static_cast<int>(xs[1]),
                            static_cast<int>(xs[2])});
    }
    if (r.next(line))
        throw ParseError("line " + std::to_string(r.line_no) + ": trailing content", r.line_no);
    return c;
}

std::string write_compressed_text(int v, const CompressedCycle& cc) {
    // canonical rotation: least label sequence
    size_t n = cc.points.size();
    size_t best = 0;
    for (size_t i = 1; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            int a = cc.points[(i + k) % n];
            int bb = cc.points[(best + k) % n];
            if (a != bb) {
                if (a < bb) best = i;
                break;
            }
        }
    }
    std::ostringstream os;
    os << "UCYCLE2 " << v << " " << n << "\n";
    for (size_t k = 0; k < n; ++k) os << cc.points[(best + k) % n] << (k + 1 < n ? " " : "\n");
    return os.str();
}

CompressedCycle read_compressed_text(const std::string& text, int* v_out) {
    LineReader r(text);
    long long v = 0, b = 0;
    expect_header(r, "UCYCLE2", v, b);
    if (v_out) *v_out = static_cast<int>(v);
    CompressedCycle cc;
    std::string line;
    while (cc.points.size() < static_cast<size_t>(b) && r.next(line)) {
        for (long long x : parse_ints(line, r.line_no)) cc.points.push_back(static_cast<int>(x));
    }
    if (cc.points.size() != static_cast<size_t>(b))
        throw ParseError("expected " + std::to_string(b) + " labels, found " +
                             std::to_string(cc.points.size()),
                         r.line_no);
    if (r.next(line))
        throw ParseError("line " + std::to_string(r.line_no) + ": trailing content", r.line_no);
    return cc;
}

std::string display_compressed(const CompressedCycle& cc) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < cc.points.size(); ++i) os << cc.points[i] << ",";
    if (!cc.points.empty()) os << cc.points.front();
    os << ")";
    return os.str();
}

// --- SHA-256 (FIPS 180-4) ----------------------------------------------------

namespace {

constexpr uint32_t kSha256K[64] = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4,
    0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe,
    0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f,
    0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7,
    0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
    0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116,
    0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
    0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7,
    0xc67178f2};

inline uint32_t rotr(uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

}  // namespace

std::string sha256_hex(std::string_view data) {
    uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                     0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};

    std::string msg(data);
    uint64_t bitlen = static_cast<uint64_t>(msg.size()) * 8;
    msg.push_back(static_cast<char>(0x80));
    while (msg.size() % 64 != 56) msg.push_back('\0');
    for (int i = 7; i >= 0; --i) msg.push_back(static_cast<char>((bitlen >> (8 * i)) & 0xff));

    for (size_t off = 0; off < msg.size(); off += 64) {
        uint32_t w[64];
        for (int i = 0; i < 16; ++i) {
            w[i] = (static_cast<uint8_t>(msg[off + 4 * i]) << 24) |
                   (static_cast<uint8_t>(msg[off + 4 * i + 1]) << 16) |
                   (static_cast<uint8_t>(msg[off + 4 * i + 2]) << 8) |
                   static_cast<uint8_t>(msg[off + 4 * i + 3]);
        }
        for (int i = 16; i < 64; ++i) {
            uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        uint32_t a = h[0], b = h[1], c = h[2], d = h[3];
        uint32_t e = h[4], f = h[5], g = h[6], hh = h[7];
        for (int i = 0; i < 64; ++i) {
            uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            uint32_t ch = (e & f) ^ (~e & g);
            uint32_t t1 = hh + s1 + ch + kSha256K[i] + w[i];
            uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            uint32_t t2 = s0 + maj;
            hh = g;
            g = f;
            f = e;
            e = d + t1;
            d = c;
            c = b;
            b = a;
            a = t1 + t2;
        }
        h[0] += a;
        h[1] += b;
        h[2] += c;
        h[3] += d;
        h[4] += e;
        h[5] += f;
        h[6] += g;
        h[7] += hh;
    }

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (uint32_t x : h) {
        for (int i = 7; i >= 0; --i) out.push_back(hex[(x >> (4 * i)) & 0xf]);
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["tool_version"] = tool_version;
    j["outputs"] = nlohmann::json::array();
    for (const auto& [path, digest] : outputs)
        j["outputs"].push_back({{"file", path}, {"sha256", digest}});
    return j;
}

RunManifest write_certificate_bundle(const std::string& dir, const OcycleCertificate& cert,
                                     const std::string& command,
                                     const nlohmann::json& parameters) {
    std::filesystem::create_directories(dir);
    RunManifest manifest;
    manifest.command = command;
    manifest.parameters = parameters;

    auto emit = [&](const std::string& name, const std::string& content) {
        write_text_file(dir + "/" + name, content);
        manifest.outputs.emplace_back(name, sha256_hex(content));
    };

    emit("sts.txt", write_sts_text(cert.ts));
    emit("ocycle.txt", write_ocycle_text(cert.ts.order(), cert.cycle));
    emit("ucycle2.txt", write_compressed_text(cert.ts.order(), compress(cert.cycle)));
    emit("provenance.json", cert.provenance.to_json().dump(2) + "\n");
    write_text_file(dir + "/manifest.json", manifest.to_json().dump(2) + "\n");
    return manifest;
}

}  // namespace ocycle
