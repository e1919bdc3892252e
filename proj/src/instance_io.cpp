#include "fairauction/instance_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace fairauction {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void structural(std::string const &path, std::string const &message)
{
  throw ParseError(message, 0, 0, path.empty() ? "/" : path);
}

/// 1-based line and column of the byte offset `pos` (nlohmann reports the
/// count of bytes read, so the failing character sits at pos - 1).
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t pos)
{
  std::size_t const end = std::min(pos == 0 ? 0 : pos - 1, text.size());
  std::size_t line = 1;
  std::size_t col  = 1;
  for (std::size_t i = 0; i < end; ++i)
  {
    if (text[i] == '\n')
    {
      ++line;
      col = 1;
    }
    else
    {
      ++col;
    }
  }
  return {line, col};
}

Json const &member(Json const &obj, char const *key, std::string const &path)
{
  auto it = obj.find(key);
  if (it == obj.end())
  {
    structural(path, std::string("missing key \"") + key + "\"");
  }
  return *it;
}

std::string as_string(Json const &j, std::string const &path)
{
  if (!j.is_string())
  {
    structural(path, "expected a string");
  }
  return j.get<std::string>();
}

Money as_amount(Json const &j, std::string const &path)
{
  if (j.is_number_unsigned())
  {
    return Money(Rational(j.get<std::uint64_t>()));
  }
  if (j.is_number_integer())
  {
    return Money(Rational(j.get<std::int64_t>()));
  }
  structural(path, "expected an integer amount");
}

std::vector<std::pair<std::string, Money>> as_matrix(Json const &j, std::string const &path)
{
  if (!j.is_object())
  {
    structural(path, "expected an object mapping resource id to amount");
  }
  std::vector<std::pair<std::string, Money>> out;
  for (auto it = j.begin(); it != j.end(); ++it)
  {
    out.emplace_back(it.key(), as_amount(it.value(), path + "/" + it.key()));
  }
  return out;
}

}  // namespace

RawInstance parse_instance(std::string_view text)
{
  Json doc;
  try
  {
    doc = Json::parse(text.begin(), text.end());
  }
  catch (nlohmann::json::parse_error const &e)
  {
    auto const [line, col] = line_column(text, e.byte);
    std::string msg        = e.what();
    // drop nlohmann's "[json.exception.parse_error.101] parse error at ..." prefix
    if (auto colon = msg.find(": "); colon != std::string::npos)
    {
      msg = msg.substr(colon + 2);
    }
    throw ParseError(msg, line, col);
  }

  if (!doc.is_object())
  {
    structural("", "expected a JSON object at top level");
  }

  RawInstance raw;

  auto const &resources = member(doc, "resources", "");
  if (!resources.is_array())
  {
    structural("/resources", "expected an array of resource ids");
  }
  for (std::size_t i = 0; i < resources.size(); ++i)
  {
    raw.resources.push_back(as_string(resources[i], "/resources/" + std::to_string(i)));
  }

  raw.auctioneer_fairness =
      as_matrix(member(doc, "auctioneer_fairness", ""), "/auctioneer_fairness");

  auto const &bidders = member(doc, "bidders", "");
  if (!bidders.is_array())
  {
    structural("/bidders", "expected an array of bidders");
  }
  for (std::size_t i = 0; i < bidders.size(); ++i)
  {
    std::string const bpath = "/bidders/" + std::to_string(i);
    auto const       &jb    = bidders[i];
    if (!jb.is_object())
    {
      structural(bpath, "expected a bidder object");
    }
    RawBidder rb;
    rb.id       = as_string(member(jb, "id", bpath), bpath + "/id");
    rb.fairness = as_matrix(member(jb, "fairness", bpath), bpath + "/fairness");

    auto const &bids = member(jb, "bids", bpath);
    if (!bids.is_array())
    {
      structural(bpath + "/bids", "expected an array of bids");
    }
    for (std::size_t k = 0; k < bids.size(); ++k)
    {
      std::string const kpath = bpath + "/bids/" + std::to_string(k);
      auto const       &jbid  = bids[k];
      if (!jbid.is_object())
      {
        structural(kpath, "expected a bid object");
      }
      RawBid rbid;
      auto const &items = member(jbid, "items", kpath);
      if (!items.is_array())
      {
        structural(kpath + "/items", "expected an array of resource ids");
      }
      for (std::size_t t = 0; t < items.size(); ++t)
      {
        rbid.items.push_back(as_string(items[t], kpath + "/items/" + std::to_string(t)));
      }
      rbid.amount = as_amount(member(jbid, "amount", kpath), kpath + "/amount");
      rb.bids.push_back(std::move(rbid));
    }
    raw.bidders.push_back(std::move(rb));
  }
  return raw;
}

std::string read_text_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw ParseError("cannot open file", 0, 0, path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(std::filesystem::path const &path, std::string_view text)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
  {
    throw AuctionError(ErrorKind::InternalInvariant, "cannot write " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

AuctionInstance load_instance(std::filesystem::path const &path)
{
  return validate_instance(parse_instance(read_text_file(path)));
}

namespace {

Json amount_json(Money const &m)
{
  if (!m.is_integral())
  {
    throw AuctionError(ErrorKind::InternalInvariant,
                       "instance files hold integer amounts, got " + m.to_exact());
  }
  auto const &num = boost::multiprecision::numerator(m.value());
  return Json(num.convert_to<std::int64_t>());
}

Json matrix_json(std::vector<std::pair<std::string, Money>> const &pairs)
{
  Json obj = Json::object();
  for (auto const &[id, amount] : pairs)
  {
    obj[id] = amount_json(amount);
  }
  return obj;
}

}  // namespace

std::string serialize_instance(RawInstance const &raw)
{
  Json doc;
  doc["resources"]           = raw.resources;
  doc["auctioneer_fairness"] = matrix_json(raw.auctioneer_fairness);
  Json bidders               = Json::array();
  for (auto const &rb : raw.bidders)
  {
    Json jb;
    jb["id"]       = rb.id;
    jb["fairness"] = matrix_json(rb.fairness);
    Json bids      = Json::array();
    for (auto const &bid : rb.bids)
    {
      Json jbid;
      jbid["items"]  = bid.items;
      jbid["amount"] = amount_json(bid.amount);
      bids.push_back(std::move(jbid));
    }
    jb["bids"] = std::move(bids);
    bidders.push_back(std::move(jb));
  }
  doc["bidders"] = std::move(bidders);
  return doc.dump(2) + "\n";
}

std::string serialize_instance(AuctionInstance const &instance)
{
  return serialize_instance(instance.to_raw());
}

}  // namespace fairauction
