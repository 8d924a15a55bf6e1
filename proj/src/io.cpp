#include "snn/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace snn {

ParseError::ParseError(size_t line, size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    size_t column = 0;  // 1-based
};

// Strips a trailing '\r' and anything from '#' on.
std::string_view strip_line(std::string_view line) {
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::vector<Token> split_whitespace(std::string_view line) {
    std::vector<Token> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        const size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        tokens.push_back(Token{line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::vector<Token> split_commas(std::string_view line) {
    std::vector<Token> fields;
    size_t start = 0;
    while (true) {
        const size_t comma = line.find(',', start);
        const size_t end = (comma == std::string_view::npos) ? line.size() : comma;
        size_t begin = start;
        size_t stop = end;
        while (begin < stop && is_space(line[begin])) ++begin;
        while (stop > begin && is_space(line[stop - 1])) --stop;
        fields.push_back(Token{line.substr(begin, stop - begin), begin + 1});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

// Decimal or 0x-prefixed hex, consuming the whole token.
uint64_t parse_number(const Token& tok, size_t line_no) {
    std::string_view s = tok.text;
    int base = 10;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        s.remove_prefix(2);
        base = 16;
    }
    uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value, base);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ParseError(line_no, tok.column,
                         "expected a number, got '" + std::string(tok.text) + "'");
    }
    return value;
}

uint8_t parse_byte(const Token& tok, size_t line_no) {
    const uint64_t value = parse_number(tok, line_no);
    if (value > 255) {
        throw ParseError(line_no, tok.column,
                         "value out of range: '" + std::string(tok.text) + "' exceeds 255");
    }
    return static_cast<uint8_t>(value);
}

bool parse_flag(const Token& tok, size_t line_no) {
    if (tok.text == "0") return false;
    if (tok.text == "1") return true;
    throw ParseError(line_no, tok.column,
                     "expected 0 or 1, got '" + std::string(tok.text) + "'");
}

// Walks `text` one line at a time, calling fn(line_no, line).
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size() && line_no > 0) break;
        const size_t nl = text.find('\n', pos);
        const size_t end = (nl == std::string_view::npos) ? text.size() : nl;
        ++line_no;
        fn(line_no, text.substr(pos, end - pos));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

constexpr std::array<std::string_view, 8> kStimulusColumns = {"cycle", "i0",   "i1",   "i2",
                                                              "sclk",  "mosi", "cs_n", "reset"};

constexpr std::string_view kTraceHeader =
    "cycle,v1_0,v1_1,v1_2,v2_0,v2_1,v2_2,"
    "r1_0,r1_1,r1_2,r2_0,r2_1,r2_2,"
    "s1_0,s1_1,s1_2,s2_0,s2_1,s2_2";

void append_binary(std::string& out, uint8_t value) {
    out += 'b';
    if (value == 0) {
        out += '0';
        return;
    }
    bool started = false;
    for (int bit = 7; bit >= 0; --bit) {
        const bool b = (value >> bit) & 1;
        if (b) started = true;
        if (started) out += b ? '1' : '0';
    }
}

}  // namespace

ProgramFile parse_program(std::string_view text) {
    ProgramFile program;
    for_each_line(text, [&](size_t line_no, std::string_view raw) {
        const std::string_view line = strip_line(raw);
        const auto tokens = split_whitespace(line);
        if (tokens.empty()) return;
        if (tokens[0].text != "write") {
            throw ParseError(line_no, tokens[0].column,
                             "expected 'write' directive, got '" + std::string(tokens[0].text) +
                                 "'");
        }
        if (tokens.size() < 3) {
            throw ParseError(line_no, line.size() + 1, "expected 'write <addr> <data>'");
        }
        if (tokens.size() > 3) {
            throw ParseError(line_no, tokens[3].column,
                             "unexpected trailing token '" + std::string(tokens[3].text) + "'");
        }
        const uint8_t addr = parse_byte(tokens[1], line_no);
        const uint8_t data = parse_byte(tokens[2], line_no);
        program.push_back(WriteEvent{addr, data});
    });
    return program;
}

std::string render_program(std::span<const WriteEvent> program) {
    std::string out;
    char buf[32];
    for (const WriteEvent& ev : program) {
        std::snprintf(buf, sizeof buf, "write 0x%02X 0x%02X\n", ev.addr, ev.data);
        out += buf;
    }
    return out;
}

std::vector<SpiLineSample> encode_spi_waveform(std::span<const WriteEvent> program,
                                               int sclk_divisor) {
    if (sclk_divisor < 2) {
        throw std::invalid_argument("sclk_divisor must be >= 2");
    }
    std::vector<SpiLineSample> waveform;
    if (program.empty()) {
        return waveform;  // CS never falls
    }
    const int low_phase = (sclk_divisor + 1) / 2;  // odd divisors round the low phase up
    const int high_phase = sclk_divisor / 2;
    waveform.reserve(2 + program.size() * 16 * static_cast<size_t>(sclk_divisor) + 2);

    waveform.push_back(SpiLineSample{false, false, true});   // idle before the burst
    waveform.push_back(SpiLineSample{false, false, false});  // CS falls, SCLK idle low
    for (const WriteEvent& ev : program) {
        const uint16_t frame = static_cast<uint16_t>((ev.addr << 8) | ev.data);
        for (int bit = 15; bit >= 0; --bit) {
            const bool mosi = (frame >> bit) & 1;
            for (int i = 0; i < low_phase; ++i) {
                waveform.push_back(SpiLineSample{false, mosi, false});
            }
            for (int i = 0; i < high_phase; ++i) {
                waveform.push_back(SpiLineSample{true, mosi, false});
            }
        }
    }
    waveform.push_back(SpiLineSample{false, false, false});  // SCLK back low
    waveform.push_back(SpiLineSample{false, false, true});   // CS rises; idle after
    return waveform;
}

std::vector<ChipInputs> parse_stimulus(std::string_view text) {
    std::vector<ChipInputs> inputs;
    bool header_seen = false;
    size_t column_count = 0;
    bool have_prev = false;
    uint64_t prev_cycle = 0;
    ChipInputs prev_inputs{};

    for_each_line(text, [&](size_t line_no, std::string_view raw) {
        const std::string_view line = strip_line(raw);
        if (split_whitespace(line).empty()) return;  // blank or comment-only
        const auto fields = split_commas(line);

        if (!header_seen) {
            if (fields.size() < 4 || fields.size() > kStimulusColumns.size()) {
                throw ParseError(line_no, 1, "header must name columns cycle,i0,i1,i2[,sclk,mosi,cs_n,reset]");
            }
            for (size_t i = 0; i < fields.size(); ++i) {
                if (fields[i].text != kStimulusColumns[i]) {
                    throw ParseError(line_no, fields[i].column,
                                     "expected column '" + std::string(kStimulusColumns[i]) +
                                         "', got '" + std::string(fields[i].text) + "'");
                }
            }
            column_count = fields.size();
            header_seen = true;
            return;
        }

        if (fields.size() != column_count) {
            throw ParseError(line_no, line.size() + 1,
                             "expected " + std::to_string(column_count) + " fields, got " +
                                 std::to_string(fields.size()));
        }

        const uint64_t cycle = parse_number(fields[0], line_no);
        if (have_prev && cycle <= prev_cycle) {
            throw ParseError(line_no, fields[0].column,
                             "cycle numbers must be strictly increasing");
        }

        ChipInputs in;  // defaults are the idle lines
        in.external_currents = {parse_byte(fields[1], line_no), parse_byte(fields[2], line_no),
                                parse_byte(fields[3], line_no)};
        if (column_count > 4) in.lines.sclk = parse_flag(fields[4], line_no);
        if (column_count > 5) in.lines.mosi = parse_flag(fields[5], line_no);
        if (column_count > 6) in.lines.cs_n = parse_flag(fields[6], line_no);
        if (column_count > 7) in.reset = parse_flag(fields[7], line_no);

        // Fill the gap: hold the previous row, idle before the first one.
        while (inputs.size() < cycle) {
            inputs.push_back(have_prev ? prev_inputs : ChipInputs{});
        }
        inputs.push_back(in);
        prev_inputs = in;
        prev_cycle = cycle;
        have_prev = true;
    });
    return inputs;
}

std::string render_stimulus(std::span<const ChipInputs> inputs) {
    std::string out;
    out += "cycle,i0,i1,i2,sclk,mosi,cs_n,reset\n";
    char buf[96];
    for (size_t c = 0; c < inputs.size(); ++c) {
        const ChipInputs& in = inputs[c];
        std::snprintf(buf, sizeof buf, "%zu,%u,%u,%u,%u,%u,%u,%u\n", c, in.external_currents[0],
                      in.external_currents[1], in.external_currents[2], in.lines.sclk ? 1 : 0,
                      in.lines.mosi ? 1 : 0, in.lines.cs_n ? 1 : 0, in.reset ? 1 : 0);
        out += buf;
    }
    return out;
}

std::string write_trace_csv(const Trace& trace) {
    std::string out;
    out += kTraceHeader;
    out += '\n';
    char buf[160];
    for (const TraceRecord& rec : trace.records) {
        std::snprintf(buf, sizeof buf,
                      "%llu,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u,%u\n",
                      static_cast<unsigned long long>(rec.cycle), rec.membrane[0], rec.membrane[1],
                      rec.membrane[2], rec.membrane[3], rec.membrane[4], rec.membrane[5],
                      rec.refractory[0], rec.refractory[1], rec.refractory[2], rec.refractory[3],
                      rec.refractory[4], rec.refractory[5], rec.spike[0] ? 1 : 0,
                      rec.spike[1] ? 1 : 0, rec.spike[2] ? 1 : 0, rec.spike[3] ? 1 : 0,
                      rec.spike[4] ? 1 : 0, rec.spike[5] ? 1 : 0);
        out += buf;
    }
    return out;
}

std::vector<TraceRecord> read_trace_csv(std::string_view text) {
    std::vector<TraceRecord> records;
    bool header_seen = false;
    for_each_line(text, [&](size_t line_no, std::string_view raw) {
        const std::string_view line = strip_line(raw);
        if (split_whitespace(line).empty()) return;
        if (!header_seen) {
            if (line != kTraceHeader) {
                throw ParseError(line_no, 1, "bad trace header");
            }
            header_seen = true;
            return;
        }
        const auto fields = split_commas(line);
        if (fields.size() != 19) {
            throw ParseError(line_no, line.size() + 1,
                             "expected 19 fields, got " + std::to_string(fields.size()));
        }
        TraceRecord rec;
        rec.cycle = parse_number(fields[0], line_no);
        for (size_t i = 0; i < 6; ++i) {
            rec.membrane[i] = parse_byte(fields[1 + i], line_no);
            rec.refractory[i] = parse_byte(fields[7 + i], line_no);
            rec.spike[i] = parse_flag(fields[13 + i], line_no);
        }
        records.push_back(rec);
    });
    return records;
}

std::string write_trace_vcd(const Trace& trace) {
    struct Signal {
        const char* name;
        int width;
    };
    // Same 18 signals as the CSV columns, in the same order.
    static constexpr std::array<Signal, 18> kSignals = {{
        {"v1_0", 8}, {"v1_1", 8}, {"v1_2", 8}, {"v2_0", 8}, {"v2_1", 8}, {"v2_2", 8},
        {"r1_0", 8}, {"r1_1", 8}, {"r1_2", 8}, {"r2_0", 8}, {"r2_1", 8}, {"r2_2", 8},
        {"s1_0", 1}, {"s1_1", 1}, {"s1_2", 1}, {"s2_0", 1}, {"s2_1", 1}, {"s2_2", 1},
    }};
    // Ids run a..r; starting at '!' would put '#' and '$' in the id set,
    // which trips up naive consumers that grep for timestamps or keywords.
    const auto id_of = [](size_t i) { return static_cast<char>('a' + i); };
    const auto value_of = [](const TraceRecord& rec, size_t i) -> uint8_t {
        if (i < 6) return rec.membrane[i];
        if (i < 12) return rec.refractory[i - 6];
        return rec.spike[i - 12] ? 1 : 0;
    };
    const auto append_change = [&](std::string& out, const TraceRecord& rec, size_t i) {
        if (kSignals[i].width == 1) {
            out += value_of(rec, i) ? '1' : '0';
            out += id_of(i);
        } else {
            append_binary(out, value_of(rec, i));
            out += ' ';
            out += id_of(i);
        }
        out += '\n';
    };

    std::string out;
    out += "$date today $end\n";
    out += "$version snnchip trace writer $end\n";
    out += "$timescale 1 ns $end\n";
    out += "$scope module snn_top $end\n";
    for (size_t i = 0; i < kSignals.size(); ++i) {
        out += "$var wire ";
        out += std::to_string(kSignals[i].width);
        out += ' ';
        out += id_of(i);
        out += ' ';
        out += kSignals[i].name;
        out += " $end\n";
    }
    out += "$upscope $end\n";
    out += "$enddefinitions $end\n";

    if (trace.records.empty()) {
        return out;
    }

    out += "#0\n$dumpvars\n";
    for (size_t i = 0; i < kSignals.size(); ++i) {
        append_change(out, trace.records[0], i);
    }
    out += "$end\n";

    for (size_t r = 1; r < trace.records.size(); ++r) {
        std::string changes;
        for (size_t i = 0; i < kSignals.size(); ++i) {
            if (value_of(trace.records[r], i) != value_of(trace.records[r - 1], i)) {
                append_change(changes, trace.records[r], i);
            }
        }
        if (!changes.empty()) {
            out += '#';
            out += std::to_string(trace.records[r].cycle);
            out += '\n';
            out += changes;
        }
    }
    return out;
}

}  // namespace snn
