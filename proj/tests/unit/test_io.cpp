#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "ocycle/base_cases.hpp"
#include "ocycle/builders.hpp"
#include "ocycle/io.hpp"

using namespace ocycle;

TEST_CASE("sts text round trip") {
    const TripleSystem& ts = base_case(9).sts;
    std::string text = write_sts_text(ts);
    CHECK(text.rfind("STS 9 12\n", 0) == 0);
    TripleSystem back = read_sts_text(text);
    CHECK(back.order() == 9);
    CHECK(back.blocks() == ts.blocks());

    SUBCASE("comments and blank lines are skipped") {
        TripleSystem c = read_sts_text("# header\n\nSTS 3 1\n# a block\n0 1 2\n");
        CHECK(c.block_count() == 1);
    }
    SUBCASE("parse errors carry line numbers") {
        try {
            read_sts_text("STS 3 1\n0 1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        }
        CHECK_THROWS_AS(read_sts_text("BLOCKS 3 1\n0 1 2\n"), ParseError);
        CHECK_THROWS_AS(read_sts_text("STS 3 1\n0 1 2\n0 1 2\n"), ParseError);
        CHECK_THROWS_AS(read_sts_text("STS 3 2\n0 1 2\n"), ParseError);
    }
    SUBCASE("an invalid system still fails validation on read") {
        CHECK_THROWS_AS(read_sts_text("STS 7 1\n0 1 2\n"), ValidationError);
    }
}

TEST_CASE("ocycle text round trip is canonical") {
    const auto& asset = base_case(7);
    std::string text = write_ocycle_text(7, asset.cycle);
    CHECK(text.rfind("OCYCLE 7 7\n", 0) == 0);
    int v = 0;
    OverlapCycle back = read_ocycle_text(text, &v);
    CHECK(v == 7);
    CHECK(validate_ocycle(asset.sts, back).clean());

    // any rotation serializes to the same bytes
    for (size_t i = 0; i < asset.cycle.size(); ++i)
        CHECK(write_ocycle_text(7, rotate_to(asset.cycle, i)) == text);
}

TEST_CASE("compressed text round trip") {
    const auto& asset = base_case(9);
    CompressedCycle cc = compress(asset.cycle);
    std::string text = write_compressed_text(9, cc);
    CHECK(text.rfind("UCYCLE2 9 12\n", 0) == 0);
    int v = 0;
    CompressedCycle back = read_compressed_text(text, &v);
    CHECK(v == 9);
    // same cycle up to rotation: decompressing gives the same block set
    OverlapCycle c = decompress(asset.sts, back);
    CHECK(validate_ocycle(asset.sts, c).clean());
}

TEST_CASE("display form appends the closing repeat") {
    CHECK(display_compressed(compress(base_case(7).cycle)) == "(2,0,4,5,6,1,3,2)");
}

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
          "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("certificate bundles round trip through the files") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "ocycle_io_test";
    fs::remove_all(dir);

    OcycleCertificate cert = ocycle_any(9);
    RunManifest manifest =
        write_certificate_bundle(dir.string(), cert, "generate 9 --route any", {{"order", 9}});
    CHECK(manifest.outputs.size() == 4);

    TripleSystem ts = read_sts_text(read_text_file((dir / "sts.txt").string()));
    OverlapCycle c = read_ocycle_text(read_text_file((dir / "ocycle.txt").string()));
    CHECK(validate_ocycle(ts, c).clean());

    // digests in the manifest match the bytes on disk
    auto mj = nlohmann::json::parse(read_text_file((dir / "manifest.json").string()));
    for (const auto& out : mj["outputs"]) {
        std::string content = read_text_file((dir / out["file"].get<std::string>()).string());
        CHECK(sha256_hex(content) == out["sha256"].get<std::string>());
    }

    // regenerating reproduces byte-identical artifacts
    fs::path dir2 = fs::temp_directory_path() / "ocycle_io_test2";
    fs::remove_all(dir2);
    write_certificate_bundle(dir2.string(), ocycle_any(9), "generate 9 --route any",
                             {{"order", 9}});
    for (const char* name : {"sts.txt", "ocycle.txt", "ucycle2.txt", "provenance.json"}) {
        CHECK(read_text_file((dir / name).string()) == read_text_file((dir2 / name).string()));
    }
    fs::remove_all(dir);
    fs::remove_all(dir2);
}
