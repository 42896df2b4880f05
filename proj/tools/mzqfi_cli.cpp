// Copyright 2026 The mzqfi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mzqfi/mzqfi.h"

namespace {

enum Exit { kOk = 0, kConfig = 1, kVerify = 2, kInternal = 3 };

struct CString {
    char *p = nullptr;
    ~CString() { mzqfi_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

int exit_for(mzqfi_status s) {
    switch (s) {
        case MZQFI_OK:
            return kOk;
        case MZQFI_ERR_CONFIG:
        case MZQFI_ERR_INVALID_ARGUMENT:
        case MZQFI_ERR_IO:
            return kConfig;
        case MZQFI_ERR_VERIFICATION:
            return kVerify;
        default:
            return kInternal;
    }
}

int report(mzqfi_status s) {
    std::cerr << "mzqfi: " << mzqfi_status_name(s) << ": " << mzqfi_last_error() << "\n";
    return exit_for(s);
}

bool read_file(const std::string &path, std::string &out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "mzqfi: config error: cannot open " << path << "\n";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

bool write_file(const std::filesystem::path &path, const std::string &content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) {
        std::cerr << "mzqfi: i/o error: cannot write " << path.string() << "\n";
        return false;
    }
    return true;
}

// Output file stem: the config "name" if present, else the config file stem.
std::string stem_for(const std::string &config_path, const std::string &text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_object() && j.contains("name") && j["name"].is_string() && !j["name"].get<std::string>().empty()) {
        std::string s = j["name"].get<std::string>();
        for (char &c : s) {
            if (c == '/' || c == '\\' || c == ' ') {
                c = '_';
            }
        }
        return s;
    }
    return std::filesystem::path(config_path).stem().string();
}

int emit(const std::string &out_dir, const std::string &file, const std::string &content) {
    if (out_dir.empty()) {
        std::cout << content;
        return kOk;
    }
    return write_file(std::filesystem::path(out_dir) / file, content) ? kOk : kConfig;
}

int cmd_sweep(const std::string &config, const std::string &out_dir) {
    std::string text;
    if (!read_file(config, text)) {
        return kConfig;
    }
    CString csv;
    mzqfi_status s = mzqfi_run_sweep(text.c_str(), &csv.p);
    if (s != MZQFI_OK) {
        return report(s);
    }
    return emit(out_dir, stem_for(config, text) + "_sweep.csv", csv.str());
}

int cmd_optimize(const std::string &config, const std::string &out_dir) {
    std::string text;
    if (!read_file(config, text)) {
        return kConfig;
    }
    CString csv, oracle;
    mzqfi_status s = mzqfi_run_optimize(text.c_str(), &csv.p, &oracle.p);
    if (s != MZQFI_OK) {
        return report(s);
    }
    std::string stem = stem_for(config, text);
    int rc = emit(out_dir, stem + "_optimize.csv", csv.str());
    if (rc == kOk && !oracle.str().empty()) {
        rc = emit(out_dir, stem + "_oracle.csv", oracle.str());
    }
    return rc;
}

int cmd_figure(const std::vector<int> &ids, const std::string &out_dir) {
    for (int id : ids) {
        CString files;
        mzqfi_status s = mzqfi_run_figure(id, out_dir.c_str(), &files.p);
        if (s != MZQFI_OK) {
            return report(s);
        }
        std::istringstream names(files.str());
        for (std::string line; std::getline(names, line);) {
            std::cout << (std::filesystem::path(out_dir) / line).string() << "\n";
        }
    }
    return kOk;
}

int cmd_verify(const std::string &level, const std::string &json_path, bool flip_s_plus) {
    CString text, js;
    int passed = 0;
    unsigned flags = flip_s_plus ? MZQFI_VERIFY_FLIP_S_PLUS : 0u;
    mzqfi_status s = mzqfi_run_verify(level == "full" ? 1 : 0, flags, &text.p, &js.p, &passed);
    if (s != MZQFI_OK) {
        return report(s);
    }
    std::cout << text.str();
    if (!json_path.empty() && !write_file(json_path, js.str())) {
        return kConfig;
    }
    return passed ? kOk : kVerify;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum Fisher information of an unbalanced Mach-Zehnder interferometer"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mzqfi_version()));

    std::string config, out_dir, level = "quick", json_path, mutate;
    std::vector<int> figures;

    CLI::App *sweep = app.add_subcommand("sweep", "QFI table over a range of transmissions");
    sweep->add_option("--config", config, "Scenario JSON")->required();
    sweep->add_option("--out", out_dir, "Output directory (stdout if omitted)");

    CLI::App *opt = app.add_subcommand("optimize", "Optimal transmission per QFI");
    opt->add_option("--config", config, "Scenario JSON")->required();
    opt->add_option("--out", out_dir, "Output directory (stdout if omitted)");

    CLI::App *fig = app.add_subcommand("figure", "Regenerate figure datasets");
    fig->add_option("--figure", figures, "Figure id, 4 to 13 (repeatable; default all)")
        ->check(CLI::Range(4, 13));
    fig->add_option("--out", out_dir, "Output directory")->required();

    CLI::App *ver = app.add_subcommand("verify", "Analytic results against the Fock-space oracle");
    ver->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    ver->add_option("--json", json_path, "Write the machine-readable summary here");
    ver->add_option("--mutate", mutate, "Test hook")->check(CLI::IsMember({"flip-s-plus"}))->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        if (*sweep) {
            return cmd_sweep(config, out_dir);
        }
        if (*opt) {
            return cmd_optimize(config, out_dir);
        }
        if (*fig) {
            if (figures.empty()) {
                for (int i = 4; i <= 13; i++) {
                    figures.push_back(i);
                }
            }
            return cmd_figure(figures, out_dir);
        }
        if (*ver) {
            return cmd_verify(level, json_path, mutate == "flip-s-plus");
        }
    } catch (const std::exception &e) {
        std::cerr << "mzqfi: internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
