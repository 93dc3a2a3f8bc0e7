// core/src/audio_io.cc

// Copyright 2026  The CMLab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "cmlab/audio_io.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "cmlab/error.h"

namespace cmlab::audio {

namespace {

std::uint32_t read_u32le(const unsigned char *p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16le(const unsigned char *p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32le(std::uint32_t v, std::string *out) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>((v >> 8) & 0xff));
  out->push_back(static_cast<char>((v >> 16) & 0xff));
  out->push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_u16le(std::uint16_t v, std::string *out) {
  out->push_back(static_cast<char>(v & 0xff));
  out->push_back(static_cast<char>((v >> 8) & 0xff));
}

}  // namespace

const char *key_name(Key k) {
  return k == Key::kBonafide ? "bonafide" : "spoof";
}

Key key_from_string(const std::string &s) {
  if (s == "bonafide") return Key::kBonafide;
  if (s == "spoof") return Key::kSpoof;
  throw ParseError("unknown trial key literal: '" + s + "'");
}

const char *split_name(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    default: return "eval";
  }
}

Waveform read_wav(const std::string &path, int required_rate_hz) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open WAV file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  const auto *p = reinterpret_cast<const unsigned char *>(bytes.data());
  const std::size_t n = bytes.size();

  if (n < 12 || std::memcmp(p, "RIFF", 4) != 0 || std::memcmp(p + 8, "WAVE", 4) != 0)
    throw MalformedWav("not a RIFF/WAVE file: " + path);

  // Chunk walk; fmt must precede data.
  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char *data = nullptr;
  std::uint32_t data_len = 0;

  std::size_t off = 12;
  while (off + 8 <= n) {
    const unsigned char *hdr = p + off;
    std::uint32_t clen = read_u32le(hdr + 4);
    const unsigned char *body = hdr + 8;
    if (off + 8 + clen > n)
      throw MalformedWav("truncated chunk '" +
                         std::string(reinterpret_cast<const char *>(hdr), 4) +
                         "' in " + path);
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (clen < 16) throw MalformedWav("fmt chunk too small in " + path);
      format = read_u16le(body);
      channels = read_u16le(body + 2);
      rate = read_u32le(body + 4);
      bits = read_u16le(body + 14);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = body;
      data_len = clen;
    }
    off += 8 + clen + (clen & 1);  // chunks are word-aligned
  }

  if (!have_fmt || data == nullptr)
    throw MalformedWav("missing fmt or data chunk: " + path);
  if (format != 1 || bits != 16)
    throw UnsupportedFormat("only PCM16 supported (format=" +
                            std::to_string(format) + ", bits=" +
                            std::to_string(bits) + "): " + path);
  if (channels != 1)
    throw UnsupportedFormat("only mono supported (channels=" +
                            std::to_string(channels) + "): " + path);
  if (required_rate_hz > 0 && static_cast<int>(rate) != required_rate_hz)
    throw UnsupportedFormat("sample rate " + std::to_string(rate) +
                            " Hz, caller requires " +
                            std::to_string(required_rate_hz) + " Hz: " + path);
  if (data_len % 2 != 0) throw MalformedWav("odd PCM16 data length: " + path);

  Waveform w;
  w.sample_rate_hz = static_cast<int>(rate);
  w.samples.resize(data_len / 2);
  for (std::size_t i = 0; i < w.samples.size(); ++i) {
    std::int16_t s =
        static_cast<std::int16_t>(read_u16le(data + 2 * i));
    w.samples[i] = static_cast<double>(s) / 32768.0;
  }
  return w;
}

void write_wav(const Waveform &w, const std::string &path) {
  std::string pcm;
  pcm.reserve(w.samples.size() * 2);
  bool clipped = false;
  for (double x : w.samples) {
    if (x > 1.0 || x < -1.0) {
      clipped = true;
      x = x > 1.0 ? 1.0 : -1.0;
    }
    long q = std::lround(x * 32768.0);
    if (q > 32767) q = 32767;
    if (q < -32768) q = -32768;
    put_u16le(static_cast<std::uint16_t>(static_cast<std::int16_t>(q)), &pcm);
  }
  if (clipped)
    std::fprintf(stderr, "warning: clipped samples while writing %s\n",
                 path.c_str());

  std::string out;
  std::uint32_t data_len = static_cast<std::uint32_t>(pcm.size());
  std::uint32_t rate = static_cast<std::uint32_t>(w.sample_rate_hz);
  out += "RIFF";
  put_u32le(36 + data_len, &out);
  out += "WAVEfmt ";
  put_u32le(16, &out);
  put_u16le(1, &out);                       // PCM
  put_u16le(1, &out);                       // mono
  put_u32le(rate, &out);
  put_u32le(rate * 2, &out);                // byte rate
  put_u16le(2, &out);                       // block align
  put_u16le(16, &out);                      // bits per sample
  out += "data";
  put_u32le(data_len, &out);
  out += pcm;

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open for writing: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("short write: " + path);
}

Manifest parse_protocol(const std::string &path, const std::string &audio_root,
                        Split split, bool verify_audio) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open protocol file: " + path);

  Manifest m;
  m.split = split;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<std::string> fields;
    std::string tok;
    while (ss >> tok) fields.push_back(tok);
    if (fields.empty()) continue;  // blank line
    if (fields.size() != 5 && fields.size() != 6)
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected 5 or 6 fields, got " +
                       std::to_string(fields.size()));

    TrialRecord r;
    r.speaker_id = fields[0];
    r.trial_id = fields[1];
    // fields[2] is carried by the format but ignored.
    if (fields[3] != "-") r.attack_id = fields[3];
    try {
      r.key = key_from_string(fields[4]);
    } catch (const ParseError &e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    r.channel_id = fields.size() == 6 ? fields[5] : kOrigChannel;
    r.audio_path =
        (std::filesystem::path(audio_root) / (r.trial_id + ".wav")).string();

    if (!seen_ids.insert(r.trial_id).second)
      throw DuplicateTrial(path + ":" + std::to_string(line_no) +
                           ": duplicate trial_id '" + r.trial_id + "'");
    if (verify_audio && !std::filesystem::exists(r.audio_path))
      throw IoError(path + ":" + std::to_string(line_no) +
                    ": referenced audio not found: " + r.audio_path);
    m.records.push_back(std::move(r));
  }
  return m;
}

void write_protocol(const Manifest &m, const std::string &path,
                    bool with_channel) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (const auto &r : m.records) {
    out << r.speaker_id << ' ' << r.trial_id << " - "
        << (r.attack_id ? *r.attack_id : "-") << ' ' << key_name(r.key);
    if (with_channel) out << ' ' << r.channel_id;
    out << '\n';
  }
  if (!out) throw IoError("short write: " + path);
}

}  // namespace cmlab::audio
