"""Sentence classification into biographical categories."""
from .evaluation import EvalResult, evaluate_classifier, random_baseline
from .features import FeatureConfig, FeatureError, TaskKind, extract_features, load_hypernym_lexicon, training_units
from .model import BioClassifier, ModelFormatError, dumps, load_model, loads, save_model, train_classifier
from .naive_bayes import UNK, NaiveBayesModel, nb_classify, nb_train
from .saliency import SaliencyFeatures, build_saliency_lexicons, saliency_features
from .svm import LinearSvmModel, svm_objective, svm_predict, svm_train
from .tree import DecisionTreeModel, Leaf, Split, gain_ratio, tree_predict, tree_train

__all__ = [
    "BioClassifier", "DecisionTreeModel", "EvalResult", "FeatureConfig", "FeatureError", "Leaf",
    "LinearSvmModel", "ModelFormatError", "NaiveBayesModel", "SaliencyFeatures", "Split", "TaskKind", "UNK",
    "build_saliency_lexicons", "dumps", "evaluate_classifier", "extract_features", "gain_ratio", "load_hypernym_lexicon",
    "load_model", "loads", "nb_classify", "nb_train", "random_baseline", "saliency_features", "save_model",
    "svm_objective", "svm_predict", "svm_train", "train_classifier", "training_units", "tree_predict",
    "tree_train",
]
