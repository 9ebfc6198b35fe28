package sm;

public class EnvyCalculator {

    private int ajuste;

    public int calcular(HolderA a, HolderB b) {
        int total = a.codigo + a.volume + a.margem + ajuste;
        int extra = b.chave + b.custo + b.prazo + a.codigo;
        int fim = b.chave + ajuste + ajuste + ajuste;
        return total + extra + fim;
    }
}
