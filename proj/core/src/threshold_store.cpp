#include "laver/threshold_store.hpp"

#include <zlib.h>

#include <cstdio>
#include <cstring>
#include <fstream>

#include "laver/threshold_chain.hpp"

namespace laver {

namespace {

constexpr char kMagic[4] = {'L', 'V', 'R', 'T'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 24));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  put_u32(out, static_cast<std::uint32_t>(v));
  put_u32(out, static_cast<std::uint32_t>(v >> 32));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  return std::uint32_t{p[0]} | std::uint32_t{p[1]} << 8 |
         std::uint32_t{p[2]} << 16 | std::uint32_t{p[3]} << 24;
}

std::uint64_t get_u64(const std::uint8_t* p) {
  return std::uint64_t{get_u32(p)} | std::uint64_t{get_u32(p + 4)} << 32;
}

}  // namespace

std::uint64_t ThresholdStore::period(ElementId p) const {
  if (p == 0) throw DomainError("period(0): the row of 0 has no finite period");
  if (p > max_p_)
    throw DomainError("period(" + std::to_string(p) +
                      "): element not covered by the store");
  return chain_period(p, [this](ElementId x) {
    return std::uint64_t{thetas_[static_cast<std::size_t>(x - 2)]};
  });
}

std::vector<std::uint8_t> ThresholdStore::serialize() const {
  if (max_p_ < 2)
    throw DomainError("refusing to serialize an empty threshold store");
  std::vector<std::uint8_t> out;
  out.reserve(16 + 4 * thetas_.size() + 4);
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, kVersion);
  put_u64(out, max_p_);
  for (std::uint32_t t : thetas_) put_u32(out, t);
  const auto crc = static_cast<std::uint32_t>(
      crc32(0L, out.data(), static_cast<uInt>(out.size())));
  put_u32(out, crc);
  return out;
}

ThresholdStore ThresholdStore::deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 20) throw FormatError("threshold file truncated");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw FormatError("bad magic: not a threshold file");
  const std::uint32_t version = get_u32(bytes.data() + 4);
  if (version != kVersion)
    throw FormatError("unsupported threshold file version " +
                      std::to_string(version));
  const std::uint64_t max_p = get_u64(bytes.data() + 8);
  if (max_p < 2 || max_p >= kElementLimit)
    throw FormatError("threshold file header carries an invalid max_p");
  const std::uint64_t expect = 16 + 4 * (max_p - 1) + 4;
  if (bytes.size() != expect)
    throw FormatError("threshold file truncated or oversized (expected " +
                      std::to_string(expect) + " bytes, got " +
                      std::to_string(bytes.size()) + ")");
  const std::uint32_t stored_crc = get_u32(bytes.data() + bytes.size() - 4);
  const auto crc = static_cast<std::uint32_t>(
      crc32(0L, bytes.data(), static_cast<uInt>(bytes.size() - 4)));
  if (crc != stored_crc) throw FormatError("threshold file checksum mismatch");

  ThresholdStore s;
  s.max_p_ = max_p;
  s.thetas_.resize(static_cast<std::size_t>(max_p - 1));
  for (std::size_t i = 0; i < s.thetas_.size(); ++i)
    s.thetas_[i] = get_u32(bytes.data() + 16 + 4 * i);
  return s;
}

void ThresholdStore::save(const std::string& path) const {
  const auto bytes = serialize();
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw IoError("cannot move " + tmp + " into place");
}

ThresholdStore ThresholdStore::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw IoError("cannot open " + path);
  const auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  std::vector<std::uint8_t> bytes(size);
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(size));
  if (!in) throw IoError("short read from " + path);
  return deserialize(bytes);
}

Row reconstruct_row(const ThresholdStore& store, ElementId p,
                    std::uint64_t max_entries) {
  if (!store.covers(p))
    throw DomainError("reconstruct_row(" + std::to_string(p) +
                      "): element not covered by the store");
  return chain_row(
      p, [&store](ElementId x) { return std::uint64_t{store.theta(x)}; },
      max_entries);
}

}  // namespace laver
