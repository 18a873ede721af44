import numpy as np
import pytest

from graph.matcher import Direction
from graph.store import load_triples
from qa.answer_pipeline import AnswerOptions, AnswerStatus, answer
from qa.question_parser import PatternClass, load_templates
from synthetic import random_graph, random_path_rule, triples_to_lines
from utils.errors import NoTemplateMatch

from test_inference import with_edge

RULES_ON = AnswerOptions(use_rules=True)
RULES_ON_NO_THRESHOLD = AnswerOptions(use_rules=True, min_std_conf=0.0, min_pca_conf=0.0)


def values(result):
    return [item.value for item in result.values]


class TestWorkedExamples:
    def test_malekeh_inferred_by_rule_one(self, malekeh_graph, registry, marriage_rules):
        result = answer(malekeh_graph, registry, marriage_rules, "Who did Malekeh Jahan marry?", RULES_ON)
        assert result.status is AnswerStatus.INFERRED
        assert result.question_class is PatternClass.I
        assert values(result) == ["Mohammad_Ali_Shah_Qajar"]
        assert result.values[0].prediction.rule == "r1"

    def test_malekeh_without_rules(self, malekeh_graph, registry, marriage_rules):
        result = answer(malekeh_graph, registry, marriage_rules, "Who did Malekeh Jahan marry?")
        assert result.status is AnswerStatus.NO_ANSWER
        assert result.values == ()

    @pytest.mark.parametrize("graph_name, question, expected, rule", [
        ("malekeh_graph", "Who did Malekeh Jahan marry?", "Mohammad_Ali_Shah_Qajar", "r1"),
        ("jeremy_graph", "Who did Jeremy Piven marry?", "Scott_Marshall_(director)", "r2"),
        ("kurt_graph", "Who did Kurt Brändle marry?", "Julius_van_Zuylen_van_Nijeveld", "r3"),
    ])
    def test_inferred_with_zero_thresholds(self, request, registry, marriage_rules,
                                           graph_name, question, expected, rule):
        graph = request.getfixturevalue(graph_name)
        result = answer(graph, registry, marriage_rules, question, RULES_ON_NO_THRESHOLD)
        assert result.status is AnswerStatus.INFERRED
        assert values(result) == [expected]
        assert result.values[0].prediction.rule == rule

    @pytest.mark.parametrize("graph_name, question", [
        ("jeremy_graph", "Who did Jeremy Piven marry?"),
        ("kurt_graph", "Who did Kurt Brändle marry?"),
    ])
    def test_low_confidence_rules_give_no_answer(self, request, registry, marriage_rules, graph_name, question):
        graph = request.getfixturevalue(graph_name)
        result = answer(graph, registry, marriage_rules, question, RULES_ON)
        assert result.status is AnswerStatus.NO_ANSWER

    def test_paraphrase_template(self, malekeh_graph, registry, marriage_rules):
        result = answer(malekeh_graph, registry, marriage_rules, "Who is married to Malekeh_Jahan?", RULES_ON)
        assert values(result) == ["Mohammad_Ali_Shah_Qajar"]


class TestDirectAnswers:
    def test_direct_objects(self, malekeh_graph, registry, marriage_rules):
        result = answer(malekeh_graph, registry, marriage_rules, "Who did Parent X marry?", RULES_ON)
        assert result.status is AnswerStatus.DIRECT
        assert values(result) == ["Parent_Z"]
        assert result.values[0].prediction is None

    def test_property(self, kurt_graph, registry, marriage_rules):
        result = answer(kurt_graph, registry, marriage_rules, "When was Kurt Brändle died?")
        assert result.status is AnswerStatus.DIRECT
        assert result.question_class is PatternClass.II
        assert values(result) == ["1943-11-03"]

    def test_missing_property(self, kurt_graph, registry, marriage_rules):
        result = answer(kurt_graph, registry, marriage_rules, "When was Kurt Brändle born?", RULES_ON)
        assert result.status is AnswerStatus.NO_ANSWER

    def test_relations(self, malekeh_graph, registry, marriage_rules):
        result = answer(malekeh_graph, registry, marriage_rules,
                        "What is the relationship between Son B and Malekeh Jahan?")
        assert result.status is AnswerStatus.DIRECT
        assert result.question_class is PatternClass.III
        assert [(v.value, v.direction) for v in result.values] == [("hasChild", Direction.BACKWARD)]

    def test_unknown_subject(self, malekeh_graph, registry, marriage_rules):
        result = answer(malekeh_graph, registry, marriage_rules, "Who did Nobody Here marry?", RULES_ON)
        assert result.status is AnswerStatus.NO_ANSWER

    def test_rules_never_used_for_other_classes(self, kurt_graph, registry, marriage_rules):
        result = answer(kurt_graph, registry, marriage_rules, "When did Person G die?", RULES_ON_NO_THRESHOLD)
        assert result.status is AnswerStatus.NO_ANSWER

    def test_unmatched_question_raises(self, malekeh_graph, registry, marriage_rules):
        with pytest.raises(NoTemplateMatch):
            answer(malekeh_graph, registry, marriage_rules, "How tall is X?", RULES_ON)

    def test_adding_predicted_edge_flips_to_direct(self, malekeh_graph, registry, marriage_rules):
        question = "Who did Malekeh Jahan marry?"
        inferred = answer(malekeh_graph, registry, marriage_rules, question, RULES_ON)
        graph = with_edge(malekeh_graph, "Malekeh_Jahan", "isMarriedTo", "Mohammad_Ali_Shah_Qajar")
        direct = answer(graph, registry, marriage_rules, question, RULES_ON)

        assert inferred.status is AnswerStatus.INFERRED
        assert direct.status is AnswerStatus.DIRECT
        assert values(direct) == values(inferred)


class TestRuleArbitration:
    RULES = [
        "low: (a)-[worksWith]->(b) => (a)-[isMarriedTo]->(b)\n",
        "high: (a)-[livesWith]->(b) => (a)-[isMarriedTo]->(b)\n",
    ]

    @pytest.fixture
    def graph(self):
        return load_triples([
            "Ann\tworksWith\tBob\n",
            "Ann\tlivesWith\tCid\n",
            "Ann\tlivesWith\tBob\n",
            "Eve\tlivesWith\tFay\n",
            "Eve\tisMarriedTo\tFay\n",
            "Eve\tworksWith\tGus\n",
        ])

    @pytest.fixture
    def rules(self):
        from rules.association import load_rules
        return load_rules(self.RULES)

    def test_highest_pca_first_and_deduplicated(self, graph, registry, rules):
        result = answer(graph, registry, rules, "Who did Ann marry?", RULES_ON_NO_THRESHOLD)
        assert values(result) == ["Bob", "Cid"]
        assert [v.prediction.rule for v in result.values] == ["high", "high"]

    def test_threshold_drops_weak_rule(self, graph, registry, rules):
        options = AnswerOptions(use_rules=True, min_std_conf=0.0, min_pca_conf=0.5)
        result = answer(graph, registry, rules, "Who did Ann marry?", options)
        assert all(v.prediction.rule == "high" for v in result.values)
        assert all(v.prediction.pca_conf >= 0.5 for v in result.values)


@pytest.mark.parametrize("value", [-0.1, 1.1])
def test_options_validate_thresholds(value):
    with pytest.raises(ValueError):
        AnswerOptions(min_std_conf=value)
    with pytest.raises(ValueError):
        AnswerOptions(min_pca_conf=value)


@pytest.fixture(scope="module")
def random_fixture():
    rng = np.random.default_rng(2024)
    graph = load_triples(triples_to_lines(random_graph(rng, 20, 3, 60)))
    rules = [random_path_rule(rng, ["r0", "r1", "r2"], 1 + k % 3) for k in range(12)]
    rules = [type(rule)(rule.body, rule.head, name=f"g{k}") for k, rule in enumerate(rules)]
    registry = load_templates([f"I|Whom does (*p) {rel}?|{rel}\n" for rel in ("r0", "r1", "r2")])
    questions = [
        f"Whom does {graph.nodes[int(rng.integers(0, len(graph.nodes)))].name} {rel}?"
        for rel in rng.choice(["r0", "r1", "r2"], size=50)
    ]
    return graph, registry, rules, questions


THRESHOLDS = [(0.0, 0.0), (0.1, 0.2), (0.25, 0.25), (0.5, 0.3), (0.3, 0.6), (0.9, 0.9)]


def test_raising_thresholds_never_adds_answers(random_fixture):
    graph, registry, rules, questions = random_fixture
    for question in questions:
        for low in THRESHOLDS:
            for high in THRESHOLDS:
                if high[0] < low[0] or high[1] < low[1]:
                    continue
                loose = answer(graph, registry, rules, question, AnswerOptions(True, *low))
                strict = answer(graph, registry, rules, question, AnswerOptions(True, *high))
                assert set(values(strict)) <= set(values(loose))


def test_rules_off_never_infers(random_fixture):
    graph, registry, rules, questions = random_fixture
    for question in questions:
        off = answer(graph, registry, rules, question, AnswerOptions(use_rules=False, min_std_conf=0.0, min_pca_conf=0.0))
        assert off.status is not AnswerStatus.INFERRED
        on = answer(graph, registry, rules, question, RULES_ON_NO_THRESHOLD)
        if off.status is AnswerStatus.DIRECT:
            assert on == off


def test_inferred_values_meet_thresholds(random_fixture):
    graph, registry, rules, questions = random_fixture
    options = AnswerOptions(True, 0.2, 0.3)
    for question in questions:
        result = answer(graph, registry, rules, question, options)
        if result.status is AnswerStatus.INFERRED:
            for item in result.values:
                assert item.prediction.std_conf >= 0.2
                assert item.prediction.pca_conf >= 0.3


def test_deterministic(random_fixture):
    graph, registry, rules, questions = random_fixture
    first = [answer(graph, registry, rules, q, RULES_ON_NO_THRESHOLD) for q in questions]
    second = [answer(graph, registry, rules, q, RULES_ON_NO_THRESHOLD) for q in questions]
    assert first == second
