// Copyright 2026 the mcc authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcc/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"monomial-Cartesian locally recoverable codes"};
    app.require_subcommand(1);

    std::string descriptor_path, bundle_path, message_path, word_path, out_path;
    std::vector<std::string> table_args;
    uint64_t budget_exact = 20000000, budget_minors = 1000000, trials = 1000, seed = 0;
    uint32_t axis = 0;

    CLI::App* construct = app.add_subcommand("construct", "build a code bundle from a descriptor");
    construct->add_option("descriptor", descriptor_path, "descriptor file")->required();
    construct->add_option("out", out_path, "bundle file to write")->required();

    CLI::App* encode = app.add_subcommand("encode", "encode a message with a bundle");
    encode->add_option("bundle", bundle_path, "bundle file")->required();
    encode->add_option("message", message_path, "message file, k symbols")->required();
    encode->add_option("out", out_path, "codeword file to write")->required();

    CLI::App* recover = app.add_subcommand("recover", "fill erasures marked ? in a codeword");
    recover->add_option("bundle", bundle_path, "bundle file")->required();
    recover->add_option("word", word_path, "received word file, ? marks an erasure")->required();
    recover->add_option("out", out_path, "recovered codeword file to write")->required();
    recover->add_option("--axis", axis, "restrict recovery to one axis (default: all)");

    CLI::App* verify = app.add_subcommand("verify", "re-derive and check a bundle's claims");
    verify->add_option("bundle", bundle_path, "bundle file")->required();
    verify->add_option("--budget-exact", budget_exact, "codeword budget for exact distance");
    verify->add_option("--budget-minors", budget_minors, "minor budget for MDS checks");
    verify->add_option("--trials", trials, "sampling trials when exact distance is over budget");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--axis", axis, "verify only this axis's certificate");

    CLI::App* table = app.add_subcommand("table", "print a parameter table or run a search");
    table->add_option("args", table_args,
                      "table1 | table2 | examples | search <p> <q> <n1> <n2>")
        ->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*construct) return mcc::cmd_construct(descriptor_path, out_path);
        if (*encode) return mcc::cmd_encode(bundle_path, message_path, out_path);
        if (*recover) return mcc::cmd_recover(bundle_path, word_path, out_path, axis);
        if (*verify)
            return mcc::cmd_verify(bundle_path, budget_exact, budget_minors, trials, seed, axis);
        if (*table) return mcc::cmd_table(table_args, std::cout);
    } catch (const mcc::spec_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
