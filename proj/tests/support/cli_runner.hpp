#pragma once

// Helpers for tests that drive the cogdist binary as a subprocess.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cli {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

// Runs `command`, capturing combined output in a file under `dir`.
inline RunResult run(const std::string& command, const fs::path& dir) {
    fs::path capture = dir / "capture.txt";
    std::string full = command + " >\"" + capture.string() + "\" 2>&1";
    int status = std::system(full.c_str());
    RunResult result;
    if (WIFEXITED(status)) {
        result.exit_code = WEXITSTATUS(status);
    }
    std::ifstream in(capture);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

inline void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

inline std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Fresh scratch directory, removed on destruction.
class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() /
                ("cogdist_test_" + std::to_string(rd()) + "_" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

// A 4-category positive-definite map file (the worked 4x4 matrix).
inline std::string pd_map_file() {
    return "*Vertices 4\n"
           "1 \"A\" 0.0 0.0\n"
           "2 \"B\" 1.0 0.0\n"
           "3 \"C\" 0.0 1.0\n"
           "4 \"D\" 1.0 1.0\n"
           "*Edges\n"
           "1 2 0.1\n"
           "1 3 0.3\n"
           "1 4 0.8\n"
           "2 3 0.2\n"
           "2 4 0.1\n"
           "3 4 0.6\n";
}

inline std::string small_profiles_csv() {
    return "entity,kind,category,count\n"
           "G1,group,A,4\n"
           "G1,group,B,1\n"
           "G2,group,C,3\n"
           "G2,group,D,2\n"
           "P1,panel_member,A,8\n"
           "P1,panel_member,B,2\n"
           "P2,panel_member,B,5\n"
           "P3,panel_member,D,6\n"
           "P3,panel_member,C,1\n";
}

}  // namespace cli
