#include "lpict/model.hpp"

namespace lpict::models {

using lts::EventMessage;
using lts::StateNode;
using Tags = std::set<ResistTag>;

namespace {

StateNode conjunctive_state(std::string id, const std::vector<std::string>& events,
                            const Tags& resists, std::vector<std::string> message) {
  StateNode s{std::move(id), {}, std::nullopt, EventMessage{std::move(message)}};
  for (const auto& e : events) s.events.push_back({e, resists});
  s.combine = lts::build_event_tree(
      events, std::vector<lts::TreeOp>(events.size() - 1, lts::TreeOp::And));
  return s;
}

StateNode renamed(StateNode s, std::string id) {
  s.id = std::move(id);
  return s;
}

}  // namespace

ProtocolModel builtin_tls13() {
  // Each row of the handshake keeps the guarantees of the rows before it.
  const Tags hello{ResistTag::Replay,         ResistTag::Mitm,
                   ResistTag::ForwardSecrecy, ResistTag::Integrity,
                   ResistTag::IdentityAuth,   ResistTag::SelectionSync};
  Tags server = hello;
  server.insert({ResistTag::Confidentiality, ResistTag::Verification});
  const Tags& certificate = server;
  const Tags& application = server;

  const std::vector<std::string> client_hello{"ClientHello", "Key_share",
                                              "Signature_algorithms",
                                              "Psk_key_exchange_modes", "Pre_shared_key"};
  const std::vector<std::string> server_flight{
      "ServerHello", "Key_share",   "Pre_shared_key",    "EncryptedExtensions",
      "CertificateRequest", "Certificate", "CertificateVerify", "Finished"};

  StateNode s1 = conjunctive_state("S1", client_hello, hello, client_hello);
  StateNode s2 = conjunctive_state("S2", server_flight, server, server_flight);
  StateNode s4 = conjunctive_state("S4", {"Certificate", "CertificateVerify"}, certificate,
                                   {"Certificate", "CertificateVerify", "Finished"});
  StateNode s6{"S6", {{"ApplicationData", application}}, std::nullopt,
               EventMessage{{"ApplicationData"}}};
  s6.combine = lts::EventTree::node(lts::TreeOp::Or, lts::EventTree::leaf("ApplicationData"),
                                    lts::EventTree::leaf("ApplicationData", true));

  std::vector<StateNode> states{s1,           s2, renamed(s2, "S3"), s4, renamed(s4, "S5"),
                                s6, renamed(s6, "S7")};
  std::vector<lts::GuardedTransition> transitions;
  for (int i = 1; i < 7; ++i)
    transitions.push_back({"S" + std::to_string(i), "msg" + std::to_string(i),
                           "S" + std::to_string(i + 1), std::nullopt});

  ProtocolModel model;
  model.name = "TLS1.3";
  model.lts = lts::build_guarded_lts(std::move(states), std::move(transitions), "S1", "S7",
                                     "S_end");
  model.environments = {EnvironmentConfig::ideal(),
                        EnvironmentConfig::nonideal({AttackerCapability::Replay,
                                                     AttackerCapability::Mitm})};
  return model;
}

ProtocolModel builtin_dh() {
  auto single = [](std::string id, std::string event, Tags resists) {
    StateNode s{std::move(id), {{event, std::move(resists)}}, std::nullopt, std::nullopt};
    s.combine = lts::EventTree::leaf(event);
    return s;
  };
  std::vector<StateNode> states{
      single("Init", "random_nonce",
             {ResistTag::Mitm, ResistTag::Confidentiality, ResistTag::Integrity}),
      single("ExchangeA", "public_value_send", {ResistTag::Confidentiality}),
      single("ExchangeB", "public_value_receive", {ResistTag::Confidentiality}),
      single("Done", "shared_secret_derive",
             {ResistTag::Confidentiality, ResistTag::Integrity}),
  };
  std::vector<lts::GuardedTransition> transitions{
      {"Init", "g_a", "ExchangeA", std::nullopt},
      {"ExchangeA", "g_b", "ExchangeB", std::nullopt},
      {"ExchangeB", "derive", "Done", std::nullopt},
  };

  ProtocolModel model;
  model.name = "Diffie-Hellman";
  model.lts = lts::build_guarded_lts(std::move(states), std::move(transitions), "Init", "Done");
  model.environments = {EnvironmentConfig::ideal(),
                        EnvironmentConfig::nonideal({AttackerCapability::Mitm})};
  return model;
}

std::vector<std::pair<std::string, std::string>> builtin_models() {
  return {{"tls13", "TLS 1.3 handshake, states S1..S7"},
          {"dh", "unauthenticated Diffie-Hellman key exchange"}};
}

ProtocolModel resolve_model(const std::string& name_or_path) {
  if (name_or_path == "tls13") return builtin_tls13();
  if (name_or_path == "dh") return builtin_dh();
  return load_model_file(name_or_path);
}

}  // namespace lpict::models
