#ifndef OCYCLE_IO_HPP
#define OCYCLE_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ocycle/builders.hpp"
#include "ocycle/cycle.hpp"
#include "ocycle/design.hpp"

namespace ocycle {

inline constexpr const char* kToolVersion = "ocycle 0.1.0";

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// --- normative text formats -------------------------------------------------
// STS:      "STS v b"      then b lines "a b c", ascending within a line
// OCYCLE:   "OCYCLE v b"   then b lines "head hidden tail"
// UCYCLE2:  "UCYCLE2 v b"  then one line of b labels
// Readers skip blank lines and lines starting with '#'.  Writers emit the
// canonical rotation (least compressed form) so output is byte-stable.

std::string write_sts_text(const TripleSystem& ts);
TripleSystem read_sts_text(const std::string& text);

std::string write_ocycle_text(int v, const OverlapCycle& c);
OverlapCycle read_ocycle_text(const std::string& text, int* v_out = nullptr);

std::string write_compressed_text(int v, const CompressedCycle& cc);
CompressedCycle read_compressed_text(const std::string& text, int* v_out = nullptr);

// Display form with the closing repeat, the way such cycles are usually printed.
std::string display_compressed(const CompressedCycle& cc);

std::string sha256_hex(std::string_view data);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// --- certificate bundles ----------------------------------------------------

struct RunManifest {
    std::string command;
    nlohmann::json parameters;
    std::string tool_version = kToolVersion;
    std::vector<std::pair<std::string, std::string>> outputs;  // (relative path, sha256)

    nlohmann::json to_json() const;
};

// Writes sts.txt, ocycle.txt, ucycle2.txt, provenance.json and manifest.json
// under dir (created if needed); returns the manifest.
RunManifest write_certificate_bundle(const std::string& dir, const OcycleCertificate& cert,
                                     const std::string& command,
                                     const nlohmann::json& parameters);

}  // namespace ocycle

#endif
