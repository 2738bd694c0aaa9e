#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ties/events.hpp"

namespace ties::test {

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::string tmpl = (std::filesystem::temp_directory_path() / "ties_test_XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
    path_ = buf.data();
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const {
    return (std::filesystem::path(path_) / name).string();
  }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline InteractionEvent make_event(GameId game, std::int64_t ts, PlayerId player,
                                   std::uint16_t team = 0, std::uint16_t playlist = 0,
                                   std::uint32_t assists = 0, std::uint32_t indirect = 0,
                                   std::uint32_t betrayals = 0) {
  InteractionEvent ev;
  ev.game_id = game;
  ev.timestamp = ts;
  ev.playlist = playlist;
  ev.team = team;
  ev.player = player;
  ev.direct_assists = assists;
  ev.indirect_assists = indirect;
  ev.betrayals = betrayals;
  return ev;
}

}  // namespace ties::test
