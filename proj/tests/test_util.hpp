#pragma once
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "adk/io.hpp"

inline std::string data_dir() {
  if (const char* env = std::getenv("ADK_DATA_DIR")) return env;
#ifdef ADK_DATA_DIR
  return ADK_DATA_DIR;
#else
  return "data";
#endif
}

inline adk::Adinkra load(const std::string& name) {
  return adk::load_adinkra(data_dir() + "/" + name + ".json");
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
