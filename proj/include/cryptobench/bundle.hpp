#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cryptobench/error.hpp"
#include "cryptobench/util/fnv.hpp"

namespace cryptobench::bundle {

/// Challenge data shipped inside the library. Each asset carries the FNV-1a
/// checksum of its bytes as recorded when the asset was transcribed, so any
/// accidental edit shows up as a checksum failure.
struct Asset {
  std::string_view name;
  std::string_view content;
  std::uint64_t checksum;
};

// Notes on individual assets:
//  - collision: the two colliding 9841-trit messages, compact notation.
//  - qam_key2: '#', '*', '@' are placeholders for three punctuation marks
//    whose identities the source text leaves open.
//  - qam_layout: 'c' takes the next consonant-stream symbol, 'v' the next
//    vowel-stream symbol; line breaks are ignored.
//  - table7: S11 = S7 - S3. The printed table reads S7 - S2, which computes
//    y^2 - 2a - 2 and breaks the program; table7_printed keeps that form.
//  - aes_sbox: the standard published table, not part of the challenge texts.
inline constexpr std::array<Asset, 22> kAssets = {{
    {"collision", R"(0^{243*39} (101100110 101111100 101100000)^[9] 0^{121}
0^{243*39} (000011110 100111111 001000000)^[9] 0^{121}
)", 0xa1741611a9cd64cfULL},
    {"twinpeaks_ciphertext", R"(e473f19a247429ab33b66268d57dd241
)", 0x43ce7723d6ac7697ULL},
    {"rotor_ciphertext", R"(TRRYSSPRYRYROYTOPTOPTSPSPRS
)", 0x8ef0f1df8065a7cbULL},
    {"rotor_tables", R"(; position  O P R S T Y
red     T Y S R O P
white   R S O P Y T
purple  Y R P T S O
green   S R P O Y T
yellow  S T Y O P R
blue    R T O Y P S
)", 0xeb55279351516be9ULL},
    {"qam_part1", R"(66674C36666F43D3C199900AA1AA325992A
67A59D9B4A8B69330D1BC000153367A5E33
D30E6692D0F349D3321FFFF0ED706667A7F
670D999679F4AA67561BA679B4AA54F34D5
AB0F4AACCF000055CE633670D9DA54CE37F
660DE19CD995335495523CCAAA8F1E03325
86CF48A98CD9B387FD9D546A99E9D200033
3201513FE5B4AA00CCCE9667554CD2CCCB3
330F32A666553CD756AC3E0674E9D369E1D
C6A9999780007F00961E66465519FEA8B25
14CCCB332AA63332CCCE6D2A99AACCCC004
)", 0x71bf85e426297b10ULL},
    {"qam_part2", R"(66CA61967319CCD2CE76998CE6433332D19
B46784C65334E999A402ADA0265A99A6633
33319B32D3299698CCC96986619967134CC
B4CE23333334CC6730CE90170CCCD2CE669
996A61999EA63332CCA4C3332D4CD3334CC
D3319994730CCCD3A6669D96A66999699B3
98640CC86CE619676AD4CD3308999866D33
79321C33210B4C6732199B53218019A404C
D2DE65A986663398CCCCCB5319CC6665997
B96A63398CD9CCD2CD9A399A66339866619
98CD9CC325A6339CCE619998C04C66CE633
996A61998CF66967334CC66CA6199865E(0)_2
)", 0x0a7fa4e5223bb773ULL},
    {"qam_table4a", R"(; gray hamming frequency
1011 0110011 46
0010 0101010 30
1001 0011001 24
0001 1101001 24
0011 1000011 19
0000 0000000 15
0110 1100110 13
1100 0111100 8
1111 1111111 8
1101 1010101 7
0100 1001100 6
1110 0010110 5
1010 1011010 5
0101 0100101 4
1000 1110000 4
0111 0001111 2
)", 0x6846a42c1abe62d8ULL},
    {"qam_table4b", R"(; gray hamming frequency
0100 1001100 85
1011 0110011 50
1001 0011001 33
0001 1101001 26
1010 1011010 17
0011 1000011 9
0000 0000000 8
1110 0010110 7
1100 0111100 2
0010 0101010 1
1000 1110000 1
0111 0001111 0
0101 0100101 0
1101 1010101 0
0110 1100110 0
1111 1111111 0
)", 0x65342d40f1ac0702ULL},
    {"qam_key1", R"(; part 1: consonants
0000000 l
0001111 z
0010110 b
0011001 h
0100101 v
0101010 n
0110011 t
0111100 w
1000011 r
1001100 g
1010101 p
1011010 m
1100110 d
1101001 s
1110000 f
1111111 c
)", 0xc1a8e58f20dccea3ULL},
    {"qam_key2", R"(; part 2: vowels, space, hyphen; # * @ stand for three distinct punctuation marks
0000000 y
0010110 #
0011001 a
0101010 -
0110011 e
0111100 *
1000011 u
1001100 space
1011010 i
1101001 o
1110000 @
)", 0x27be6bd5b2c7d010ULL},
    {"qam_layout", R"(ccvcvvvcvvccvvcvcvcvvcvccvvcvcvcvvccvcvcvcccvvccvvcvvcvcvvvccvcc
vvcvccvcvcvvvcvccvvccvvcvccvvccvvcvvcvvcvcvvvcvvcvvccvvcvvcvccvv
cvccvcvvccvcvcvvcvcvcvccvccvvccvvcvcvcccvcvccvvvccvcvccvcvcvcvvc
vvccvvccvccvvvcvccvcvccvvcvcvcvcvvccvccvcvvcvvcvcccvvvccvccvcvcc
vcvvvcccvccvcvcvvcccvvvcvvccvvvccvvcvcvcvcvcvvcvvccvvccvcvvccvcc
cvccvcvcvvcvvcvvcvccvvcvcccvcvcvvvcvcvvcvvcvcvcvccvcvvvcvccvvcvc
cvvvccvcvcvvcvvccvcvcvvcvcvcvvvvcvcvccvvccvccvccvcvcvvcvvcvcvcvc
vvcvvcvvccv
)", 0x2cc0a2eeb9df81cdULL},
    {"qam_plaintext", R"(these are the mores of the lunar inhabitants# the moon boy-shorty will not eat sweets# rugs# bread# sausage or ice cream of the factory that does not print ads in newspapers# and will not go to treatment a doctor who did not invented any puzzle advertising to attract patients# usually# the lunatic buys only those things that he read in the newspaper# if he sees somewhere on the wall a clever ad# then he can buy even the thing that he does not need at all#
)", 0x3fea162e861ef60cULL},
    {"qam_segments", R"(22,19,3,3,36,53,3,33,20,28
)", 0x1f8e758ecf87ee43ULL},
    {"factoring2019", R"(4076361302550483684524984004483156158356462640553515813866703718791672670905308860844304055285019651507728831663677166092475161554197561215372884449957084219778472139533451263689901852711025976018935658830540651908064758287421268759621419191593382767252094717222418132289251314647500491996323400002019
7830799927833657758696152811024002692382891492752691194950119664549497756373569985393554661132717198368717093111812566649031173428184496335886470985446121512780351314542347866531365008870883047099654288891241821353207362290372720539680784860373583572653630883685906916701587362236649126895719656663293825501223970887996292526012494280624322547389357643046102816132642256417499027286468001256009599212578383223023458925765092934836426848117494065463529201859600747521892957258104033195441014023432365815292013921853276356749234592907492418315906619039651325142154451518308886658505820006667836934411881
)", 0x40e8ea6e192649d3ULL},
    {"factoring2019_solution", R"(2019000075878154181681129810414477022346818209175194524879208890921501144547048007953722271285690350264116081579241189587393202602664199899594021414383
2019000073973494194521339805682093959182265746083995594826393753631669289175827851666668014167119439386543289850940734885806826120718179729242641026893
)", 0xbd305c0ba40ccb0aULL},
    {"slp_example_broken", R"(S1 = y
S2 = S1 * S1
S3 = 11
S4 = 5
S5 = S3 * S4
S6 = S2 - S5
)", 0x7892a87a0517c95bULL},
    {"slp_example_calc", R"(S1 = y
S2 = S1 * S1
S3 = 2
S4 = S3 * S3
S5 = S2 - S4
)", 0x244c323658cd4c60ULL},
    {"table6", R"(S1 = y
S2 = S1 * S1
S3 = 55
S4 = S2 - S3
S5 = S4 * S4
S6 = 11
S7 = S3 * S6
S8 = S5 - S7
S9 = S1 * S8
)", 0x2d905005e7765502ULL},
    {"table7", R"(S1 = y
S2 = 2
S3 = 22
S4 = S2 * S3
S5 = S3 * S4
S6 = S1 * S1
S7 = S6 - S4
S8 = S7 * S7
S9 = S8 - S5
S10 = S1 * S9
S11 = S7 - S3
S12 = S1 * S11
S13 = S3 * S12
S14 = S10 - S13
)", 0xd04887fe7a021d6dULL},
    {"table7_printed", R"(S1 = y
S2 = 2
S3 = 22
S4 = S2 * S3
S5 = S3 * S4
S6 = S1 * S1
S7 = S6 - S4
S8 = S7 * S7
S9 = S8 - S5
S10 = S1 * S9
S11 = S7 - S2
S12 = S1 * S11
S13 = S3 * S12
S14 = S10 - S13
)", 0xa3b40d1e003828f4ULL},
    {"table8", R"(S1 = y
S2 = S1 * S1
S3 = 2
S4 = 22
S5 = S3 * S4
S6 = S2 - S5
S7 = S6 - S4
S8 = S6 * S7
S9 = S4 * S4
S10 = S8 - S9
S11 = S1 * S10
)", 0x43670a29c77da9e3ULL},
    {"aes_sbox", R"(; AES S-box (FIPS-197), 256 decimal outputs
99 124 119 123 242 107 111 197 48 1 103 43 254 215 171 118
202 130 201 125 250 89 71 240 173 212 162 175 156 164 114 192
183 253 147 38 54 63 247 204 52 165 229 241 113 216 49 21
4 199 35 195 24 150 5 154 7 18 128 226 235 39 178 117
9 131 44 26 27 110 90 160 82 59 214 179 41 227 47 132
83 209 0 237 32 252 177 91 106 203 190 57 74 76 88 207
208 239 170 251 67 77 51 133 69 249 2 127 80 60 159 168
81 163 64 143 146 157 56 245 188 182 218 33 16 255 243 210
205 12 19 236 95 151 68 23 196 167 126 61 100 93 25 115
96 129 79 220 34 42 144 136 70 238 184 20 222 94 11 219
224 50 58 10 73 6 36 92 194 211 172 98 145 149 228 121
231 200 55 109 141 213 78 169 108 86 244 234 101 122 174 8
186 120 37 46 28 166 180 198 232 221 116 31 75 189 139 138
112 62 181 102 72 3 246 14 97 53 87 185 134 193 29 158
225 248 152 17 105 217 142 148 155 30 135 233 206 85 40 223
140 161 137 13 191 230 66 104 65 153 45 15 176 84 187 22
)", 0xa516d7fc18611025ULL},
}};

inline constexpr std::string_view kOverrideEnv = "CRYPTOBENCH_BUNDLE_DIR";
inline constexpr std::string_view kPrefix = "bundled:";

inline const Asset* find(std::string_view name) {
  for (const Asset& a : kAssets) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

inline std::vector<std::string_view> names() {
  std::vector<std::string_view> out;
  for (const Asset& a : kAssets) out.push_back(a.name);
  return out;
}

inline bool checksum_ok(const Asset& a) { return fnv1a64(a.content) == a.checksum; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Embedded asset text, or the file of the same name in the override
/// directory when $CRYPTOBENCH_BUNDLE_DIR is set and has one.
inline std::string asset(std::string_view name) {
  if (const char* dir = std::getenv(std::string(kOverrideEnv).c_str()); dir && *dir) {
    const std::filesystem::path p = std::filesystem::path(dir) / std::string(name);
    if (std::filesystem::exists(p)) return read_file(p);
  }
  const Asset* a = find(name);
  if (!a) throw InvalidInput("no bundled asset named '" + std::string(name) + "'");
  return std::string(a->content);
}

/// "bundled:<name>" resolves through asset(); anything else is a file path.
inline std::string resolve(std::string_view ref) {
  if (ref.starts_with(kPrefix)) return asset(ref.substr(kPrefix.size()));
  return read_file(std::filesystem::path(std::string(ref)));
}

/// Splits text into its non-empty lines, dropping '\r' and ';' comments.
inline std::vector<std::string> lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == ';') continue;
    out.push_back(line);
  }
  return out;
}

}  // namespace cryptobench::bundle
