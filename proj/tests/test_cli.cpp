// Copyright 2026 The cverify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace fs = std::filesystem;

namespace {

class Workdir {
 public:
  Workdir() {
    path_ = fs::temp_directory_path() / ("cvtool-test-" + std::to_string(::getpid()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~Workdir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

int cvtool(const std::string& args, std::string* output = nullptr, const Workdir* dir = nullptr) {
  std::string cmd = std::string(CVTOOL_PATH) + " " + args;
  std::string capture;
  if (output != nullptr && dir != nullptr) {
    capture = *dir / "stdout.txt";
    cmd += " > " + capture;
  }
  cmd += " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (output != nullptr && dir != nullptr) {
    std::ifstream f(capture);
    output->assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void truncate_copy(const std::string& from, const std::string& to, std::size_t drop) {
  std::ifstream in(from, std::ios::binary);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::ofstream(to, std::ios::binary) << data.substr(0, data.size() - drop);
}

void flip_last_byte(const std::string& path) {
  std::fstream f(path, std::ios::binary | std::ios::in | std::ios::out);
  f.seekg(-1, std::ios::end);
  char c = 0;
  f.get(c);
  f.seekp(-1, std::ios::end);
  f.put(static_cast<char>(c ^ 1));
}

void pipeline(const std::string& scheme, bool uses_params) {
  Workdir d;
  const std::string P = uses_params ? " --params " + (d / "params") : "";
  const std::string S = " --scheme " + scheme + P;
  REQUIRE(cvtool("keygen" + S + " --seed 3 --out " + (d / "pk") + " --sk " + (d / "sk")) == 0);
  REQUIRE(cvtool("ck-gen" + S + " --seed 4 --out " + (d / "ck")) == 0);
  REQUIRE(cvtool("vk-gen" + S + " --ck " + (d / "ck") + " --pk " + (d / "pk") + " --out " +
                 (d / "vk")) == 0);
  REQUIRE(cvtool("sign-toy" + S + " --sk " + (d / "sk") + " --msg hello --seed 5 --out " +
                 (d / "sig")) == 0);

  CHECK(cvtool("verify" + S + " --pk " + (d / "pk") + " --sig " + (d / "sig") + " --msg hello") == 0);
  CHECK(cvtool("cverify" + S + " --vk " + (d / "vk") + " --sig " + (d / "sig") + " --msg hello") ==
        0);
  CHECK(cvtool("cverify" + S + " --vk " + (d / "vk") + " --sig " + (d / "sig") + " --msg hellp") ==
        1);
  CHECK(cvtool("verify" + S + " --pk " + (d / "pk") + " --sig " + (d / "sig") + " --msg hellp") ==
        1);

  truncate_copy(d / "sig", d / "short", 1);
  CHECK(cvtool("cverify" + S + " --vk " + (d / "vk") + " --sig " + (d / "short") + " --msg hello") ==
        2);
  CHECK(cvtool("cverify" + S + " --vk " + (d / "pk") + " --sig " + (d / "sig") + " --msg hello") ==
        2);

  struct stat st{};
  REQUIRE(::stat((d / "ck").c_str(), &st) == 0);
  CHECK((st.st_mode & 0777) == 0600);
  REQUIRE(::stat((d / "vk").c_str(), &st) == 0);
  CHECK((st.st_mode & 0777) == 0600);

  // Same seed, same key bytes.
  REQUIRE(cvtool("ck-gen" + S + " --seed 4 --out " + (d / "ck2")) == 0);
  std::ifstream a(d / "ck", std::ios::binary), b(d / "ck2", std::ios::binary);
  CHECK(std::string(std::istreambuf_iterator<char>(a), {}) ==
        std::string(std::istreambuf_iterator<char>(b), {}));
}

}  // namespace

TEST_CASE("Squirrels toy pipeline") { pipeline("squirrels", true); }
TEST_CASE("Wave toy pipeline") { pipeline("wave", true); }
TEST_CASE("Rabin-Williams pipeline") { pipeline("rw", false); }

TEST_CASE("tampered signature file rejects") {
  Workdir d;
  const std::string S = " --scheme squirrels --params " + (d / "params");
  REQUIRE(cvtool("keygen" + S + " --seed 8 --out " + (d / "pk") + " --sk " + (d / "sk")) == 0);
  REQUIRE(cvtool("sign-toy" + S + " --sk " + (d / "sk") + " --msg m --out " + (d / "sig")) == 0);
  flip_last_byte(d / "sig");
  CHECK(cvtool("verify" + S + " --pk " + (d / "pk") + " --sig " + (d / "sig") + " --msg m") == 1);
}

TEST_CASE("params rows") {
  Workdir d;
  std::string out;
  CHECK(cvtool("params --scheme squirrels --instance I", &out, &d) == 0);
  CHECK(out.find("Squirrels-I") != std::string::npos);
  CHECK(out.find("681780") != std::string::npos);
  CHECK(out.find("3360") != std::string::npos);
  CHECK(out.find("20700") != std::string::npos);
  CHECK(out.find("121.1") != std::string::npos);
  CHECK(out.find("32.94") != std::string::npos);
  CHECK(cvtool("params --scheme wave --instance Wave1644", &out, &d) == 0);
  CHECK(out.find("253.6") != std::string::npos);
  CHECK(cvtool("params --scheme squirrels --instance VI") == 2);
  CHECK(cvtool("params --scheme nope") == 2);
}

TEST_CASE("bench-ops is deterministic") {
  Workdir d;
  std::string first, second;
  CHECK(cvtool("bench-ops --scheme squirrels --instance I --seed 2", &first, &d) == 0);
  CHECK(cvtool("bench-ops --scheme squirrels --instance I --seed 2", &second, &d) == 0);
  CHECK(first == second);
  CHECK(first.find("ratio    32.94") != std::string::npos);
}

TEST_CASE("simulate-forgery reports every strategy") {
  Workdir d;
  std::string out;
  CHECK(cvtool("simulate-forgery --scheme wave --trials 2000", &out, &d) == 0);
  CHECK(out.find("random") != std::string::npos);
  CHECK(out.find("scalar-multiple") != std::string::npos);
  CHECK(out.find("EXCEEDS") == std::string::npos);
}
