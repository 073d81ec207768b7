#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "gemkit/io.hpp"
#include "gemkit/report.hpp"

namespace gemkit {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw GemError(Errc::InternalInconsistency, "SHA-256 failed");
  }
  std::ostringstream os;
  for (unsigned int k = 0; k < length; ++k) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[k]);
  return os.str();
}

namespace {

class LockedFile {
 public:
  LockedFile(const std::filesystem::path& path, bool exclusive) {
    fd_ = ::open(path.c_str(), exclusive ? (O_RDWR | O_CREAT | O_APPEND) : O_RDONLY, 0644);
    if (fd_ < 0) throw GemError(Errc::IoError, "cannot open " + path.string() + ": " + std::strerror(errno));
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw GemError(Errc::IoError, "cannot lock " + path.string());
    }
  }
  ~LockedFile() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  LockedFile(const LockedFile&) = delete;
  LockedFile& operator=(const LockedFile&) = delete;

  std::string read_all() const {
    std::string out;
    char buf[65536];
    off_t offset = 0;
    while (true) {
      const ssize_t got = ::pread(fd_, buf, sizeof buf, offset);
      if (got < 0) throw GemError(Errc::IoError, "read failed");
      if (got == 0) break;
      out.append(buf, static_cast<std::size_t>(got));
      offset += got;
    }
    return out;
  }

  void append(const std::string& line) const {
    std::size_t done = 0;
    while (done < line.size()) {
      const ssize_t put = ::write(fd_, line.data() + done, line.size() - done);
      if (put < 0) throw GemError(Errc::IoError, "append failed");
      done += static_cast<std::size_t>(put);
    }
  }

 private:
  int fd_ = -1;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Parses the store; `visit` gets every good record, bad lines go to `issues`.
template <typename Fn>
void each_record(const std::string& text, std::vector<CatalogIssue>& issues, Fn visit) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    try {
      auto record = nlohmann::ordered_json::parse(line);
      if (!record.is_object() || !record.contains("digest") || !record["digest"].is_string()) {
        issues.push_back({number, "record without digest"});
        continue;
      }
      visit(record);
    } catch (const nlohmann::json::parse_error&) {
      issues.push_back({number, "line does not parse"});
    }
  }
}

}  // namespace

CatalogAddResult catalog_add(const std::filesystem::path& store, const GemFile& gem, int threads) {
  const std::string canonical = gem_text(GemFile{gem.graph, gem.name, gem.metadata});
  CatalogAddResult out{false, sha256_hex(canonical)};
  const auto report = to_json(compute_report(gem.graph, threads));

  LockedFile file(store, true);
  std::vector<CatalogIssue> issues;
  bool seen = false;
  each_record(file.read_all(), issues, [&](const nlohmann::ordered_json& r) {
    seen = seen || r["digest"].get<std::string>() == out.digest;
  });
  if (seen) return out;

  nlohmann::ordered_json record;
  record["digest"] = out.digest;
  record["name"] = gem.name;
  record["added_at"] = utc_timestamp();
  for (const auto& [key, value] : report.items()) record[key] = value;
  file.append(record.dump() + "\n");
  out.added = true;
  return out;
}

CatalogPredicate parse_predicate(const std::string& text) {
  for (const char* op : {"<=", ">=", "!=", "=", "<", ">"}) {
    const auto pos = text.find(op);
    if (pos != std::string::npos && pos > 0) {
      return {text.substr(0, pos), op, text.substr(pos + std::strlen(op))};
    }
  }
  throw GemError(Errc::ParseError, "bad filter \"" + text + "\"");
}

bool matches(const nlohmann::ordered_json& record, const CatalogPredicate& pred) {
  if (!record.contains(pred.field)) return false;
  const auto& field = record[pred.field];
  if (field.is_number()) {
    double want = 0;
    try {
      std::size_t used = 0;
      want = std::stod(pred.value, &used);
      if (used != pred.value.size()) return false;
    } catch (const std::exception&) {
      return false;
    }
    const double have = field.get<double>();
    if (pred.op == "=") return have == want;
    if (pred.op == "!=") return have != want;
    if (pred.op == "<") return have < want;
    if (pred.op == "<=") return have <= want;
    if (pred.op == ">") return have > want;
    return have >= want;
  }
  if (field.is_null()) return false;
  const std::string have = field.is_string() ? field.get<std::string>() : field.dump();
  if (pred.op == "=") return have == pred.value;
  if (pred.op == "!=") return have != pred.value;
  return false;
}

CatalogScan catalog_scan(const std::filesystem::path& store, const std::vector<CatalogPredicate>& where) {
  CatalogScan out;
  if (!std::filesystem::exists(store)) return out;
  LockedFile file(store, false);
  each_record(file.read_all(), out.corrupt, [&](const nlohmann::ordered_json& r) {
    for (const auto& pred : where) {
      if (!matches(r, pred)) return;
    }
    out.records.push_back(r);
  });
  return out;
}

}  // namespace gemkit
