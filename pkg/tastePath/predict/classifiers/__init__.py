from tastePath.predict.classifiers.constant import ConstantClassifier
from tastePath.predict.classifiers.factory import ClassifierFactory
from tastePath.predict.classifiers.forest import ForestClassifier
from tastePath.predict.classifiers.interface import IClassifier
from tastePath.predict.classifiers.logistic import LogisticClassifier

__all__ = ["ClassifierFactory", "ConstantClassifier", "ForestClassifier", "IClassifier", "LogisticClassifier"]
